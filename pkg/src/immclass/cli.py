"""Command-line front end: ``immclass <subcommand> ...``.

Exit status is 0 on success, 1 when a check reports failure (an invalid
triangulation, a failing duality sweep) and 2 on malformed input or a
violated precondition such as a parity error in census data.
"""
from __future__ import annotations

import argparse
import sys
from itertools import combinations
from pathlib import Path

from immclass import report
from immclass.classification import classify, classify_chi, exact_sequence_report, maps_to_s2
from immclass.complex_core import (
    ChainPresentation,
    ParseError,
    PresentationError,
    chain_presentation,
    format_complex,
    parse_complex,
    parse_presentation,
    validate_closed_oriented,
)
from immclass.cup import CupError, cup_pairing, pairing_matrix
from immclass.cyclic import CyclicValue
from immclass.groups import divisibility
from immclass.homology import alpha, cohomology, homology, universal_coefficient_check, verify_duality
from immclass.ledger import (
    CensusError,
    FramedCurveRecord,
    ParityError,
    SeifertData,
    closed_cusp_check,
    invariant_I,
    invariant_i_from_I,
    invariant_j,
    lift_check,
    load_census,
    rotation_difference,
    seifert_consistency,
    smale_invariant,
    takase_i,
)
from immclass.library import builtin
from immclass.semigroup import SemigroupElement, connected_sum, sum_with_sphere


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


# -- input -----------------------------------------------------------------

def _load(args) -> tuple[str, ChainPresentation, object]:
    """(name, presentation, complex-or-None) for --builtin or --file."""
    if args.builtin:
        try:
            b = builtin(args.builtin)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return b.name, b.presentation, b.complex
    path = Path(args.file)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        p = parse_presentation(text)
        name = p.name or path.stem
        return name, p, None
    c = parse_complex(text)
    rep = validate_closed_oriented(c)
    if not rep.is_valid:
        raise CheckFailed(report.validation_payload(rep, c.counts()))
    return path.stem, chain_presentation(c, rep.orientation, name=path.stem), c


def _coords(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed class coordinates {text!r}") from None


def _h2_class(p: ChainPresentation, text: str):
    h2 = cohomology(p, 2)
    coords = _coords(text)
    if len(coords) != h2.ngens:
        raise UsageError(f"H^2 = {h2} needs {h2.ngens} coordinates, got {len(coords)}")
    return h2.element(coords)


def parse_descriptor(text: str) -> SemigroupElement:
    """``NAME:c1,c2,...:i`` over a builtin, or ``d=D:i=I`` for bare arithmetic."""
    parts = text.split(":")
    if len(parts) == 2 and parts[0].startswith("d=") and parts[1].startswith("i="):
        try:
            return SemigroupElement.bare(int(parts[0][2:]), int(parts[1][2:]))
        except ValueError as exc:
            raise UsageError(f"malformed descriptor {text!r}: {exc}") from None
    if len(parts) != 3:
        raise UsageError(f"descriptor {text!r} must be NAME:coords:i or d=D:i=I")
    name, coords, i = parts
    try:
        b = builtin(name)
        i_val = int(i)
    except ValueError as exc:
        raise UsageError(f"malformed descriptor {text!r}: {exc}") from None
    p = b.presentation
    c = _h2_class(p, coords)
    h1 = cohomology(p, 1)
    return SemigroupElement.from_class(h1.moduli, c.group.moduli, c.coords, i_val)


# -- subcommands -----------------------------------------------------------

def cmd_validate(args):
    if args.builtin:
        b = builtin(args.builtin)
        c, p = b.complex, b.presentation
    else:
        text = Path(args.file).read_text()
        if text.lstrip().startswith("{"):
            c, p = None, None
            try:
                p = parse_presentation(text)
            except (ParseError, PresentationError) as exc:
                raise CheckFailed({"valid": False, "mode": "presentation", "error": str(exc)})
        else:
            c, p = parse_complex(text), None
    if c is not None:
        rep = validate_closed_oriented(c)
        out = report.validation_payload(rep, c.counts())
        out["mode"] = "triangulation"
        if not rep.is_valid:
            raise CheckFailed(out)
        return out
    out = {"mode": "presentation", "valid": True, "cells": list(p.cells), "boundary_squares_zero": True,
           "fundamental_cycle_ok": True}
    if p.cup_tensor is not None:
        try:
            cup_pairing(p)
            out["cup_descends"] = True
        except PresentationError as exc:
            out.update(valid=False, cup_descends=False, error=str(exc))
            raise CheckFailed(out)
    return out


def cmd_homology(args):
    name, p, _ = _load(args)
    coeffs = args.coeffs
    degrees = []
    for k in range(4):
        degrees.append({
            "k": k,
            "homology": report.group_payload(homology(p, k, coeffs), basis=args.basis),
            "cohomology": report.group_payload(cohomology(p, k, coeffs), basis=args.basis),
        })
    dual = verify_duality(p)
    out = {"manifold": name, "coefficients": coeffs, "degrees": degrees,
           "alpha": alpha(p), "duality": dual.passed,
           "universal_coefficients": [{"k": k, "z2_dim": a, "predicted": b}
                                      for k, a, b in universal_coefficient_check(p)]}
    if p.simplices is not None or p.cup_tensor is not None:
        out["cup_pairing"] = pairing_matrix(p)
    return out


def cmd_classify(args):
    _, p, _ = _load(args)
    return report.table_payload(classify(p, args.bound))


def cmd_classify_chi(args):
    name, p, _ = _load(args)
    chi = _h2_class(p, args.chi)
    row = classify_chi(p, chi)
    out = report.chi_row_payload(row)
    out["manifold"] = name
    out["h2"] = report.group_payload(chi.group)
    return out


def cmd_s2(args):
    _, p, _ = _load(args)
    return report.s2_payload(maps_to_s2(p, args.bound))


def cmd_exact(args):
    _, p, _ = _load(args)
    r = exact_sequence_report(p, args.bound)
    return {"terms": list(r.terms()), "h2_mod2": report.group_payload(r.h2_mod2),
            "notes": r.notes}


def cmd_duality_sweep(args):
    name, p, _ = _load(args)
    if p.simplices is None and p.cup_tensor is None:
        raise UsageError(f"{name} carries no cup data")
    rows = []
    from immclass.cup import index_two_chi_cup_h1
    for chi in cohomology(p, 2).window(args.bound):
        idx = index_two_chi_cup_h1(chi)
        d = divisibility(chi)
        rows.append({"chi": list(chi.coords), "d": d, "two_d": 2 * d, "index": idx,
                     "status": "PASS" if idx == 2 * d else "FAIL"})
    failed = sum(r["status"] == "FAIL" for r in rows)
    out = {"manifold": name, "bound": args.bound, "rows": rows, "checked": len(rows),
           "failed": failed, "status": "PASS" if not failed else "FAIL"}
    if failed:
        raise CheckFailed(out)
    return out


def cmd_consum(args):
    a = parse_descriptor(args.a)
    if args.b is not None:
        result = connected_sum(a, parse_descriptor(args.b))
    elif args.sphere is not None:
        result = sum_with_sphere(a, args.sphere)
    else:
        raise UsageError("give a second descriptor or --sphere N")
    return report.element_payload(result)


def _census(args):
    if not args.census:
        return None
    try:
        return load_census(Path(args.census).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.census}: {exc.strerror}") from None


def _inline_seifert(args) -> SeifertData:
    need = [k for k in ("sigma", "cusps", "d") if getattr(args, k) is None]
    if need:
        raise UsageError(f"missing --{', --'.join(need)} (or pass --census)")
    d = args.d
    R = CyclicValue(4 * d, args.R) if args.R is not None else None
    r = CyclicValue(2 * d, args.r) if args.r is not None else None
    return SeifertData(args.sigma, args.cusps, args.alpha or 0, d, R, r, label="inline")


def _entries(args):
    census = _census(args)
    if census is None:
        return [_inline_seifert(args)]
    return census[0]


def _pick(items, label):
    for x in items:
        if x.label == label:
            return x
    raise UsageError(f"no census entry labelled {label!r}")


def cmd_ledger(args):
    kind = args.formula
    if kind == "smale":
        if args.sigma is None or args.cusps is None:
            raise UsageError("smale needs --sigma and --cusps")
        return {"formula": "smale", "sigma": args.sigma, "cusps": args.cusps,
                "omega": smale_invariant(args.sigma, args.cusps),
                "closed_manifold_relation": closed_cusp_check(args.sigma, args.cusps)}
    if kind == "takase":
        if args.sigma is None or args.cusps is None:
            raise UsageError("takase needs --sigma and --cusps")
        a = args.alpha or 0
        return {"formula": "takase", "sigma": args.sigma, "alpha": a, "cusps": args.cusps,
                "i": takase_i(args.sigma, a, args.cusps)}
    if kind == "I":
        rows = []
        for e in _entries(args):
            I = invariant_I(e)
            rows.append({"label": e.label, "d": e.d, "I": report.cyclic_payload(I),
                         "i": report.cyclic_payload(invariant_i_from_I(I))})
        return {"formula": "I", "entries": rows}
    if kind == "j":
        rows = []
        for e in _entries(args):
            rows.append({"label": e.label, "d": e.d, "j": report.cyclic_payload(invariant_j(e))})
        return {"formula": "j", "entries": rows}
    if kind == "consistency":
        census = _census(args)
        if census is None:
            raise UsageError("consistency needs --census")
        entries = census[0]
        if args.a and args.b:
            pairs = [(_pick(entries, args.a), _pick(entries, args.b))]
        else:
            pairs = list(combinations(entries, 2))
        rows = [{"a": x.label, "b": y.label, "consistent": seifert_consistency(x, y)}
                for x, y in pairs]
        out = {"formula": "consistency", "pairs": rows}
        if not all(r["consistent"] for r in rows):
            raise CheckFailed(out)
        return out
    if kind in ("lift", "rd"):
        census = _census(args)
        if census is None:
            raise UsageError(f"{kind} needs --census")
        curves: list[FramedCurveRecord] = census[1]
        if kind == "lift":
            rows = [{"label": c.label, "coherent": lift_check(c)} for c in curves]
            out = {"formula": "lift", "curves": rows}
            if not all(r["coherent"] for r in rows):
                raise CheckFailed(out)
            return out
        if not (args.a and args.b):
            raise UsageError("rd needs --a and --b curve labels")
        x, y = _pick(curves, args.a), _pick(curves, args.b)
        return {"formula": "rd", "a": x.label, "b": y.label,
                "rd": report.cyclic_payload(rotation_difference(x, y))}
    raise UsageError(f"unknown ledger formula {kind!r}")


def cmd_export(args):
    b = builtin(args.builtin)
    if args.as_ == "tri":
        if b.complex is None:
            raise UsageError(f"{b.name} ships as a direct presentation, not a triangulation")
        return format_complex(b.complex, comment=f"{b.name}")
    return report.to_json(b.presentation.to_json())


# -- parser ----------------------------------------------------------------

def _add_source(sp, required=True):
    g = sp.add_mutually_exclusive_group(required=required)
    g.add_argument("--builtin", metavar="NAME", help="S3, S1xS2, T3, L(p,q), S1xS2_tri, T3_tri")
    g.add_argument("--file", metavar="PATH", help="triangulation (.tri) or presentation (JSON)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="immclass",
                                     description="Regular homotopy classification of immersions M^3 -> R^5")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check a triangulation or presentation")
    _add_source(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("homology", help="(co)homology groups, alpha, duality")
    _add_source(sp)
    sp.add_argument("--coeffs", choices=("Z", "Z2"), default="Z")
    sp.add_argument("--basis", action="store_true", help="include generator vectors")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("classify", help="Wu classes and fibers Z/4d(c)")
    _add_source(sp)
    sp.add_argument("--bound", type=int, default=2)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("classify-chi", help="immersions with a given normal Euler class")
    _add_source(sp)
    sp.add_argument("--chi", required=True, help="comma-separated H^2 coordinates")
    sp.set_defaults(func=cmd_classify_chi)

    sp = sub.add_parser("s2", help="homotopy classes of maps to S^2")
    _add_source(sp)
    sp.add_argument("--bound", type=int, default=2)
    sp.set_defaults(func=cmd_s2)

    sp = sub.add_parser("exact-sequence", help="terms of H^2(;Z/2) -> [M,S^2] -> Imm -> Z/2")
    _add_source(sp)
    sp.add_argument("--bound", type=int, default=1)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("duality-sweep", help="check index(2 chi cup H^1) = 2 d(chi)")
    _add_source(sp)
    sp.add_argument("--bound", type=int, default=3)
    sp.set_defaults(func=cmd_duality_sweep)

    sp = sub.add_parser("consum", help="connected sum of invariant pairs")
    sp.add_argument("a", help="NAME:c1,c2,...:i or d=D:i=I")
    sp.add_argument("b", nargs="?", help="second descriptor")
    sp.add_argument("--sphere", type=int, help="sum with the sphere immersion of invariant N")
    sp.set_defaults(func=cmd_consum)

    sp = sub.add_parser("ledger", help="evaluate invariant formulas on census data")
    sp.add_argument("formula", choices=("smale", "takase", "I", "j", "consistency", "lift", "rd"))
    sp.add_argument("--census", metavar="PATH")
    sp.add_argument("--sigma", type=int)
    sp.add_argument("--cusps", type=int)
    sp.add_argument("--alpha", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--R", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--a", help="first census label")
    sp.add_argument("--b", help="second census label")
    sp.set_defaults(func=cmd_ledger)

    sp = sub.add_parser("export", help="write a builtin in a documented file format")
    sp.add_argument("--builtin", required=True, metavar="NAME")
    sp.add_argument("--as", dest="as_", choices=("tri", "json"), default="json")
    sp.set_defaults(func=cmd_export, raw=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    render = report.to_json if args.format == "json" else report.to_text
    try:
        out = args.func(args)
    except CheckFailed as exc:
        sys.stdout.write(render(exc.payload))
        return 1
    except (UsageError, ParseError, PresentationError, ParityError, CensusError, CupError,
            ValueError) as exc:
        sys.stderr.write(f"immclass: error: {exc}\n")
        return 2
    if getattr(args, "raw", False):
        sys.stdout.write(out)
    else:
        sys.stdout.write(render(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
