"""Plain-data payloads for the CLI, plus the JSON and text renderers.

Both renderers walk the same payload in sorted key order, so text and JSON
output always carry the same integers in the same order.
"""
from __future__ import annotations

import json

from immclass.classification import ChiRow, ClassificationTable, S2Table
from immclass.complex_core import ValidationReport
from immclass.cyclic import CyclicValue
from immclass.groups import FgAbelianGroup, GroupClass
from immclass.semigroup import SemigroupElement


def group_payload(g: FgAbelianGroup, basis: bool = True) -> dict:
    out = {"free_rank": g.free_rank, "torsion": list(g.torsion), "structure": str(g)}
    if g.coefficients:
        out["coefficients"] = g.coefficients
    if basis and g.generators is not None:
        out["basis"] = [list(v) for v in g.generators]
    return out


def class_payload(c: GroupClass) -> list[int]:
    return list(c.coords)


def cyclic_payload(v: CyclicValue) -> dict:
    return {"modulus": v.modulus, "value": v.value}


def validation_payload(r: ValidationReport, counts) -> dict:
    return {
        "valid": r.is_valid,
        "closed": r.is_closed,
        "connected": r.is_connected,
        "euler_characteristic": r.euler_characteristic,
        "orientable": r.orientable,
        "orientation": list(r.orientation) if r.orientation is not None else None,
        "orientation_failure": r.orientation_failure,
        "links_ok": r.link_check,
        "link_failures": r.link_failures,
        "face_counts": list(counts),
    }


def chi_row_payload(r: ChiRow) -> dict:
    return {
        "chi": class_payload(r.chi),
        "d": r.d,
        "realizable": r.realizable,
        "wu_classes": [class_payload(c) for c in r.wu_classes],
        "fiber_modulus": r.fiber_modulus,
        "cup_index": r.cup_index,
        "cross_check": r.cross_check,
        "consistent": r.consistent(),
    }


def table_payload(t: ClassificationTable) -> dict:
    return {
        "manifold": t.manifold,
        "h2": group_payload(t.h2),
        "window_bound": t.bound,
        "wu_class_count": t.wu_class_count,
        "symbolic": t.symbolic,
        "c_rows": [{"c": class_payload(r.c), "d_c": r.d, "fiber_modulus": r.fiber_modulus}
                   for r in t.c_rows],
        "chi_rows": [chi_row_payload(r) for r in t.chi_rows],
        "consistent": t.consistent(),
        "notes": t.notes,
    }


def s2_payload(t: S2Table) -> dict:
    return {
        "manifold": t.manifold,
        "h2": group_payload(t.h2),
        "window_bound": t.bound,
        "symbolic": t.symbolic,
        "rows": [{"chi": class_payload(r.chi), "d": r.d, "fiber_modulus": r.fiber_modulus}
                 for r in t.rows],
    }


def element_payload(e: SemigroupElement) -> dict:
    s = e.summary
    return {
        "h1": group_payload(s.h1_group(), basis=False),
        "h2": group_payload(s.h2_group(), basis=False),
        "h2_factors": [m for m, _ in e.c],
        "c": [x for _, x in e.c],
        "d": e.d,
        "i": cyclic_payload(e.i),
    }


def to_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _scalar(x) -> str:
    if isinstance(x, str):
        return x
    return json.dumps(x)


def to_text(payload, indent: int = 0) -> str:
    lines: list[str] = []
    _emit(payload, indent, lines)
    return "\n".join(lines) + "\n"


def _emit(obj, indent: int, lines: list[str], prefix: str = "") -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if prefix:
            lines.append(pad + prefix)
            indent += 1
            pad = "  " * indent
        for k in sorted(obj):
            v = obj[k]
            if _flat(v):
                lines.append(f"{pad}{k}: {_inline(v)}")
            else:
                _emit(v, indent, lines, f"{k}:")
    elif isinstance(obj, list):
        if prefix:
            lines.append(pad + prefix)
            indent += 1
            pad = "  " * indent
        for v in obj:
            if _flat(v):
                lines.append(f"{pad}- {_inline(v)}")
            else:
                _emit(v, indent, lines, "-")
    else:
        lines.append(pad + prefix + " " + _scalar(obj) if prefix else pad + _scalar(obj))


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and
                   all(not isinstance(y, (dict, list)) for y in x)) for x in v) and len(v) <= 64
    return True


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    return _scalar(v)
