"""Builtin closed oriented 3-manifolds.

``S3`` is the boundary of the 4-simplex. ``S1xS2``, ``T3`` and ``L(p,q)`` are
small direct presentations from their standard cell structures, each with a
cellular cup tensor. ``S1xS2_tri`` and ``T3_tri`` are product triangulations
(products of ordered simplicial complexes) used to exercise the
Alexander-Whitney product on genuine triangulations.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd

from immclass.complex_core import (
    ChainPresentation,
    SimplicialComplex3,
    chain_presentation,
    coherent_orientation,
    validate_closed_oriented,
)


@dataclass
class BuiltinManifold:
    name: str
    mode: str  # "triangulation" or "presentation"
    presentation: ChainPresentation
    complex: SimplicialComplex3 | None = None
    # closed-form values: homology/cohomology as (rank, torsion) per degree,
    # alpha, and the H^1 x H^2 -> Z pairing up to sign in normal-form bases
    expected: dict = field(default_factory=dict)


def boundary_of_4_simplex() -> SimplicialComplex3:
    tets, signs = [], []
    for i in range(5):
        tets.append(tuple(v for v in range(5) if v != i))
        signs.append((-1) ** i)
    return SimplicialComplex3(5, tuple(tets), tuple(signs))


def _product(K, L):
    """Top simplices of K x L for ordered complexes K, L given by their top simplices.

    Each pair (sigma, tau) contributes one simplex per monotone lattice path
    from (sigma_0, tau_0) to (sigma_p, tau_q).
    """
    out = []
    for s in K:
        for t in L:
            p, q = len(s) - 1, len(t) - 1
            for steps in combinations(range(p + q), p):
                i = j = 0
                path = [(s[0], t[0])]
                for k in range(p + q):
                    if k in steps:
                        i += 1
                    else:
                        j += 1
                    path.append((s[i], t[j]))
                out.append(tuple(path))
    return out


def _flatten(simplices):
    verts = sorted({v for s in simplices for v in s})
    label = {v: i for i, v in enumerate(verts)}
    return len(verts), [tuple(label[v] for v in s) for s in simplices]


CIRCLE = [(0, 1), (1, 2), (0, 2)]
SPHERE2 = [tuple(v for v in range(4) if v != i) for i in range(4)]


def product_triangulation(*factors) -> SimplicialComplex3:
    """Triangulate a product of ordered complexes; orientation chosen coherently."""
    simplices = factors[0]
    for f in factors[1:]:
        n, flat = _flatten(simplices)
        simplices = _product(flat, f)
    n, flat = _flatten(simplices)
    plain = SimplicialComplex3(n, tuple(flat))
    orient = coherent_orientation(plain)
    if orient is None:
        raise RuntimeError("product triangulation is not orientable")
    tets = plain.simplices(3)
    return SimplicialComplex3(n, tets, orient)


def _from_triangulation(name, c, expected):
    report = validate_closed_oriented(c)
    if not report.is_valid:
        raise RuntimeError(f"builtin {name} failed validation: {report.failures()}")
    p = chain_presentation(c, report.orientation, name=name)
    return BuiltinManifold(name, "triangulation", p, c, expected)


def _direct(name, cells, d1, d2, d3, tensor, expected):
    p = ChainPresentation(cells=cells, boundary_1=d1, boundary_2=d2, boundary_3=d3,
                          fundamental_cycle=(1,) * cells[3], cup_tensor=tensor, name=name)
    p.check()
    return BuiltinManifold(name, "presentation", p, None, expected)


def _expected(h, alpha, pairing):
    # Poincare duality and universal coefficients give H^k from H_{3-k}
    coh = [h[3 - k] for k in range(4)]
    return {"homology": h, "cohomology": coh, "alpha": alpha, "pairing": pairing}


LENS = re.compile(r"^L\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def lens_space(p: int, q: int) -> BuiltinManifold:
    """L(p,q) from its genus-one Heegaard cell structure: one cell per degree, d_2 = p.

    The integral cup product H^1 x H^2 -> H^3 vanishes (H^1 = 0), so the single
    tensor entry only records the cellular product of the 1- and 2-cell.
    """
    if p <= 0:
        raise ValueError(f"L(p,q) needs p >= 1, got p = {p}")
    if gcd(p, q) != 1:
        raise ValueError(f"L(p,q) needs gcd(p, q) = 1, got L({p},{q})")
    q %= p
    tors = (p,) if p > 1 else ()
    h = [(1, ()), (0, tors), (0, ()), (1, ())]
    return _direct(f"L({p},{q})", (1, 1, 1, 1), [[0]], [[p]], [[0]], [(0, 0, 0, 1)],
                   _expected(h, 1 if p % 2 == 0 else 0, []))


@lru_cache(maxsize=None)
def builtin(name: str) -> BuiltinManifold:
    key = name.replace(" ", "")
    if key == "S3":
        return _from_triangulation("S3", boundary_of_4_simplex(),
                                   _expected([(1, ()), (0, ()), (0, ()), (1, ())], 0, []))
    if key == "S1xS2":
        # cells: point, S^1 edge, S^2 cell, product 3-cell; all differentials vanish
        return _direct("S1xS2", (1, 1, 1, 1), [[0]], [[0]], [[0]], [(0, 0, 0, 1)],
                       _expected([(1, ()), (1, ()), (1, ()), (1, ())], 0, [[1]]))
    if key == "T3":
        # cube with opposite faces glued: edges e0, e1, e2; squares s_i spanned by
        # e_{i+1}, e_{i+2} (cyclically) so that e_i cup s_i is the top cell
        tensor = [(i, i, 0, 1) for i in range(3)]
        z3 = [[0, 0, 0]]
        return _direct("T3", (1, 3, 3, 1), z3, [[0] * 3 for _ in range(3)],
                       [[0] for _ in range(3)], tensor,
                       _expected([(1, ()), (3, ()), (3, ()), (1, ())], 0,
                                 [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    if key == "S1xS2_tri":
        return _from_triangulation("S1xS2_tri", product_triangulation(SPHERE2, CIRCLE),
                                   _expected([(1, ()), (1, ()), (1, ()), (1, ())], 0, [[1]]))
    if key == "T3_tri":
        return _from_triangulation("T3_tri", product_triangulation(CIRCLE, CIRCLE, CIRCLE),
                                   _expected([(1, ()), (3, ()), (3, ()), (1, ())], 0,
                                             [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    m = LENS.match(key)
    if m:
        return lens_space(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unknown builtin manifold {name!r}; known: {', '.join(BUILTIN_NAMES)}, L(p,q)")


BUILTIN_NAMES = ("S3", "S1xS2", "T3", "S1xS2_tri", "T3_tri")
SMALL_LENS = ("L(2,1)", "L(3,1)", "L(4,1)", "L(5,1)", "L(5,2)", "L(6,1)", "L(7,2)", "L(8,3)")
