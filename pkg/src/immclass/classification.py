"""Regular homotopy classes of immersions M^3 -> R^5 and homotopy classes M^3 -> S^2.

Imm[M, R^5] is the disjoint union over Wu classes c in H^2(M; Z) of Z/4d(c);
the part with normal Euler class chi is Gamma_2(chi) x Z/2d(chi). [M, S^2] is
the union over every chi in H^2 of Z/2d(chi). A modulus of 0 stands for Z.

The fiber invariant i is a label in a torsor: its zero depends on reference
choices (a fixed framed structure per chi and a spin structure on M) that the
theory does not pin down canonically, so only differences of labels are
intrinsic. Every table carries this note.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from immclass.complex_core import ChainPresentation
from immclass.cup import CupError, index_two_chi_cup_h1
from immclass.cyclic import CyclicValue
from immclass.groups import FgAbelianGroup, GroupClass, divisibility, halves
from immclass.homology import cohomology

TORSOR_NOTE = ("i is a label in a Z/4d(c)-torsor; the zero label per (manifold, c) is an "
               "artifact choice standing in for the reference structure and spin structure, "
               "so only differences of i values are canonical")


def _has_cup_data(p: ChainPresentation) -> bool:
    return p.simplices is not None or p.cup_tensor is not None


@dataclass(frozen=True)
class ImmersionClass:
    """Complete invariant (c, i) of a regular homotopy class."""

    manifold: str
    c: GroupClass
    i: CyclicValue

    def __post_init__(self):
        want = 4 * divisibility(self.c)
        if self.i.modulus != want:
            raise ValueError(f"i must live in Z/{want} for this Wu class, got Z/{self.i.modulus}")

    @property
    def normal_euler_class(self) -> GroupClass:
        return 2 * self.c


def immersion_class(manifold: str, c: GroupClass, i: int) -> ImmersionClass:
    return ImmersionClass(manifold, c, CyclicValue(4 * divisibility(c), i))


@dataclass
class ChiRow:
    chi: GroupClass
    d: int
    wu_classes: list[GroupClass]
    fiber_modulus: int          # 2 d(chi)
    cup_index: int | None       # index of 2 chi cup H^1 in H^3, when cup data exists

    @property
    def realizable(self) -> bool:
        return bool(self.wu_classes)

    @property
    def cross_check(self) -> bool | None:
        return None if self.cup_index is None else self.cup_index == self.fiber_modulus

    def consistent(self) -> bool:
        """|Gamma_2| * |Z/2d(chi)| equals the sum of |Z/4d(c)| over c in Gamma_2."""
        lhs = _card_times(len(self.wu_classes), self.fiber_modulus)
        rhs = _card_sum([4 * divisibility(c) for c in self.wu_classes])
        return lhs == rhs


@dataclass
class CRow:
    c: GroupClass
    d: int                      # d(c)
    fiber_modulus: int          # 4 d(c) = 2 d(2c)


def _card_times(n: int, modulus: int):
    """Cardinality n * |Z/modulus| with 'inf' for infinite sets (n > 0)."""
    if n == 0:
        return 0
    return "inf" if modulus == 0 else n * modulus


def _card_sum(moduli: list[int]):
    if not moduli:
        return 0
    if any(m == 0 for m in moduli):
        return "inf"
    return sum(moduli)


@dataclass
class ClassificationTable:
    manifold: str
    h2: FgAbelianGroup
    bound: int
    c_rows: list[CRow]
    chi_rows: list[ChiRow]
    symbolic: str
    notes: list[str] = field(default_factory=list)

    @property
    def wu_class_count(self) -> int | None:
        """|H^2|, or None when H^2 is infinite."""
        return self.h2.order()

    @property
    def h2_finite(self) -> bool:
        return self.h2.free_rank == 0

    def consistent(self) -> bool:
        return all(r.consistent() for r in self.chi_rows)

    def cross_checks_pass(self) -> bool:
        return all(r.cross_check is not False for r in self.chi_rows)


def classify_chi(p: ChainPresentation, chi: GroupClass) -> ChiRow:
    """Wu classes over chi and the fiber Z/2d(chi); empty when chi is not twice a class."""
    h2 = cohomology(p, 2)
    if chi.group is not h2:
        raise ValueError("chi must be a class of this presentation's H^2")
    d = divisibility(chi)
    cup_index = None
    if _has_cup_data(p):
        try:
            cup_index = index_two_chi_cup_h1(chi)
        except CupError:
            cup_index = None
    return ChiRow(chi, d, halves(chi), 2 * d, cup_index)


def _symbolic(h2: FgAbelianGroup, tag: str) -> str:
    if h2.is_trivial:
        return "Z (single Wu class c = 0, fiber Z)" if tag == "c" else "Z (single chi = 0, fiber Z)"
    if tag == "c":
        return (f"disjoint union over c in {h2} of Z/4d(c), "
                f"d(c) = gcd of the {h2.free_rank} free coordinates of c (0 gives Z)")
    return (f"disjoint union over chi in {h2} of Z/2d(chi), "
            f"d(chi) = gcd of the {h2.free_rank} free coordinates of chi (0 gives Z)")


def classify(p: ChainPresentation, bound: int = 2) -> ClassificationTable:
    """Per-c rows for every Wu class in the window, per-chi rows for every chi in it.

    The window holds the classes whose free coordinates lie in [-bound, bound]
    (all torsion residues). The full, generally infinite, set is described by
    ``symbolic``.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    h2 = cohomology(p, 2)
    c_rows = []
    for c in h2.window(bound):
        d = divisibility(c)
        c_rows.append(CRow(c, d, 4 * d))
    chi_rows = [classify_chi(p, chi) for chi in h2.window(2 * bound)]
    # keep the chi rows that are twice a windowed class, plus the odd ones up to bound
    chi_rows = [r for r in chi_rows
                if all(abs(x) <= bound for x in r.chi.free_coords) or r.realizable]
    return ClassificationTable(
        manifold=p.name or "unnamed",
        h2=h2,
        bound=bound,
        c_rows=c_rows,
        chi_rows=chi_rows,
        symbolic=_symbolic(h2, "c"),
        notes=[TORSOR_NOTE],
    )


@dataclass
class S2Table:
    manifold: str
    h2: FgAbelianGroup
    bound: int
    rows: list[ChiRow]
    symbolic: str


def maps_to_s2(p: ChainPresentation, bound: int = 2) -> S2Table:
    """Fibers Z/2d(chi) of [M, S^2] over every chi in the window (no evenness needed)."""
    h2 = cohomology(p, 2)
    rows = [classify_chi(p, chi) for chi in h2.window(bound)]
    return S2Table(p.name or "unnamed", h2, bound, rows, _symbolic(h2, "chi"))


@dataclass
class ExactSequenceReport:
    h2_mod2: FgAbelianGroup
    s2: S2Table
    imm: ClassificationTable
    last: FgAbelianGroup
    notes: list[str] = field(default_factory=list)

    def terms(self) -> tuple[str, str, str, str]:
        return (str(self.h2_mod2), self.s2.symbolic, self.imm.symbolic, str(self.last))


def exact_sequence_report(p: ChainPresentation, bound: int = 1) -> ExactSequenceReport:
    """The four terms of H^2(M; Z/2) -> [M, S^2] -> Imm[M, R^5] -> Z/2 -> 0.

    Only the terms are computed; the maps between them are not realized.
    """
    return ExactSequenceReport(
        h2_mod2=cohomology(p, 2, "Z2"),
        s2=maps_to_s2(p, bound),
        imm=classify(p, bound),
        last=FgAbelianGroup(0, (2,)),
        notes=["connecting maps are not computed; exactness is not machine-checked"],
    )
