"""Invariant formulas evaluated on user-supplied census integers.

Nothing here is computed from geometry. Signatures, signed cusp counts and
rotations are inputs; this module owns their arithmetic, reductions and the
integrality and consistency constraints they must satisfy. A parity
violation means no generic map realizes the data, so it is an error rather
than a warning.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from immclass.cyclic import CyclicValue


class ParityError(ValueError):
    """Census data violates an integrality or evenness theorem."""


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertData:
    """Census of a singular Seifert surface F: W^4 -> R^5 bounding an immersion.

    ``rotation_R`` lives in Z/4d and ``rotation_r`` in Z/2d; either may be absent.
    """

    sigma: int
    cusps: int
    alpha: int
    d: int
    rotation_R: CyclicValue | None = None
    rotation_r: CyclicValue | None = None
    label: str = ""

    def __post_init__(self):
        if self.alpha < 0 or self.d < 0:
            raise CensusError("alpha and d must be non-negative")
        if self.rotation_R is not None and self.rotation_R.modulus != 4 * self.d:
            raise CensusError(f"R must live in Z/{4 * self.d}")
        if self.rotation_r is not None and self.rotation_r.modulus != 2 * self.d:
            raise CensusError(f"r must live in Z/{2 * self.d}")
        if self.rotation_R is not None and self.rotation_r is not None:
            if self.rotation_R.reduce(2 * self.d) != self.rotation_r:
                raise CensusError(f"{self.label or 'census'}: R mod 2d disagrees with r")

    @property
    def base(self) -> int:
        """3 sigma - 3 alpha + cusps, the rotation-free part of I and j."""
        return 3 * self.sigma - 3 * self.alpha + self.cusps


@dataclass(frozen=True)
class FramedCurveRecord:
    """Rotations of a framed curve against the fixed references: r in Z/2d, r2 in Z/2, R in Z/4d."""

    label: str
    d: int
    r: CyclicValue
    r2: CyclicValue
    R: CyclicValue | None = None

    def __post_init__(self):
        if self.r.modulus != 2 * self.d:
            raise CensusError(f"{self.label}: r must live in Z/{2 * self.d}")
        if self.r2.modulus != 2:
            raise CensusError(f"{self.label}: r2 must live in Z/2")
        if self.R is not None and self.R.modulus != 4 * self.d:
            raise CensusError(f"{self.label}: R must live in Z/{4 * self.d}")


def rotation_difference(x: FramedCurveRecord, y: FramedCurveRecord) -> CyclicValue:
    if x.d != y.d:
        raise CensusError(f"modulus mismatch: Z/{2 * x.d} vs Z/{2 * y.d}")
    return x.r - y.r


def lift_check(x: FramedCurveRecord) -> bool:
    """R reduces to r mod 2d and r reduces to r2 mod 2."""
    if x.R is not None and x.R.reduce(2 * x.d) != x.r:
        return False
    return x.r.reduce(2) == x.r2


def smale_invariant(sigma: int, cusps: int) -> int:
    total = 3 * sigma + cusps
    if total % 2:
        raise ParityError(f"3*sigma + cusps = {total} is odd; the Smale invariant must be an integer")
    return total // 2


def closed_cusp_check(sigma: int, cusps: int) -> bool:
    """Generic maps of closed oriented 4-manifolds have 3 sigma + cusps = 0."""
    return 3 * sigma + cusps == 0


def takase_i(sigma: int, alpha: int, cusps: int) -> int:
    """Invariant of an immersion with trivial normal bundle (normal Euler class 0)."""
    if alpha < 0:
        raise CensusError("alpha must be non-negative")
    total = 3 * (sigma - alpha) + cusps
    if total % 2:
        raise ParityError(f"3*(sigma - alpha) + cusps = {total} is odd; i must be an integer")
    return total // 2


def invariant_I(data: SeifertData) -> CyclicValue:
    if data.rotation_R is None:
        raise CensusError(f"{data.label or 'census'}: invariant I needs the rotation R")
    val = CyclicValue(4 * data.d, data.base) + data.rotation_R
    if not val.is_even:
        raise ParityError(f"{data.label or 'census'}: I = {val} is odd")
    return val


def invariant_i_from_I(I: CyclicValue) -> CyclicValue:
    if not I.is_even:
        raise ParityError(f"I = {I} is odd and has no half")
    return I.half()


def invariant_j(data: SeifertData) -> CyclicValue:
    """j in Z/2d; when R is also present, checks j = 2i."""
    if data.rotation_r is None:
        raise CensusError(f"{data.label or 'census'}: invariant j needs the rotation r")
    j = CyclicValue(2 * data.d, data.base) + data.rotation_r
    if not j.is_even:
        raise ParityError(f"{data.label or 'census'}: j = {j} is odd")
    if data.rotation_R is not None:
        i = invariant_i_from_I(invariant_I(data))
        if 2 * i != j:
            raise ParityError(f"{data.label or 'census'}: j = {j} but 2i = {2 * i}")
    return j


def seifert_consistency(a: SeifertData, b: SeifertData) -> bool:
    """Two Seifert surfaces of the same immersion must give the same j (and I)."""
    if a.d != b.d or a.alpha != b.alpha:
        return False
    m = 2 * a.d
    if a.rotation_r is not None and b.rotation_r is not None:
        lhs = CyclicValue(m, a.base) + a.rotation_r
        rhs = CyclicValue(m, b.base) + b.rotation_r
        if lhs != rhs:
            return False
    elif a.rotation_R is None or b.rotation_R is None:
        raise CensusError("consistency needs r (or R) on both census entries")
    if a.rotation_R is not None and b.rotation_R is not None:
        lhs = CyclicValue(2 * m, a.base) + a.rotation_R
        rhs = CyclicValue(2 * m, b.base) + b.rotation_R
        if lhs != rhs:
            return False
    return True


# -- census files ----------------------------------------------------------

def _cyclic(entry: dict, key: str, modulus: int) -> CyclicValue | None:
    if entry.get(key) is None:
        return None
    v = entry[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise CensusError(f"{key} must be an integer")
    return CyclicValue(modulus, v)


def seifert_from_json(entry: dict) -> SeifertData:
    try:
        d = int(entry["d"])
        return SeifertData(
            sigma=int(entry["sigma"]), cusps=int(entry["cusps"]),
            alpha=int(entry.get("alpha", 0)), d=d,
            rotation_R=_cyclic(entry, "R", 4 * d), rotation_r=_cyclic(entry, "r", 2 * d),
            label=str(entry.get("label", "")),
        )
    except KeyError as exc:
        raise CensusError(f"census entry lacks {exc.args[0]!r}") from None


def curve_from_json(entry: dict) -> FramedCurveRecord:
    try:
        d = int(entry["d"])
        return FramedCurveRecord(
            label=str(entry.get("label", "")), d=d,
            r=CyclicValue(2 * d, int(entry["r"])), r2=CyclicValue(2, int(entry["r2"])),
            R=_cyclic(entry, "R", 4 * d),
        )
    except KeyError as exc:
        raise CensusError(f"curve record lacks {exc.args[0]!r}") from None


def load_census(text: str) -> tuple[list[SeifertData], list[FramedCurveRecord]]:
    """Parse ``{"seifert": [...], "curves": [...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CensusError(f"census is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CensusError("census must be a JSON object")
    seifert = [seifert_from_json(e) for e in doc.get("seifert", [])]
    curves = [curve_from_json(e) for e in doc.get("curves", [])]
    return seifert, curves
