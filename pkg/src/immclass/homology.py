"""Integral and mod 2 (co)homology of a chain presentation."""
from __future__ import annotations

from dataclasses import dataclass, field

from immclass.complex_core import ChainPresentation
from immclass.groups import FgAbelianGroup
from immclass.snf import smith_normal_form, transpose

COEFFS = {"Z": 0, "Z2": 2, 0: 0, 2: 2}


def _coeff(coeffs) -> int:
    try:
        return COEFFS[coeffs]
    except (KeyError, TypeError):
        raise ValueError(f"coefficients must be 'Z' or 'Z2', got {coeffs!r}") from None


def _sparse_rows(A):
    return [[(j, x) for j, x in enumerate(row) if x] for row in A]


def subquotient(outgoing, out_rows: int, incoming, n: int, in_cols: int,
                modulus: int = 0, **meta) -> FgAbelianGroup:
    """ker(outgoing) / im(incoming) inside Z^n (or GF(2)^n).

    ``outgoing`` is ``out_rows x n`` and ``incoming`` is ``n x in_cols`` with
    ``outgoing @ incoming == 0``. Generators and the coordinate map are built
    from the Smith form of ``incoming`` (its ``U_inv`` columns adapt a basis to
    the image) followed by a kernel computation on the complementary columns.
    """
    snf_in = smith_normal_form(incoming, n, in_cols, modulus)
    diag = snf_in.diagonal
    r = snf_in.rank
    W = snf_in.U_inv
    U = snf_in.U
    rest = n - r

    # outgoing restricted to the complement of the image basis
    A2 = []
    for row in _sparse_rows(outgoing):
        acc = [0] * rest
        for j, x in row:
            wrow = W[j]
            for c in range(rest):
                w = wrow[r + c]
                if w:
                    acc[c] += x * w
        if modulus:
            acc = [a % modulus for a in acc]
        A2.append(acc)
    snf_out = smith_normal_form(A2, out_rows, rest, modulus)
    r2 = snf_out.rank
    V2, V2i = snf_out.V, snf_out.V_inv
    free = rest - r2

    tors_idx = [i for i in range(r) if diag[i] != 1] if not modulus else []
    torsion = [diag[i] for i in tors_idx]

    gens = []
    for f in range(free):
        col = [V2[c][r2 + f] for c in range(rest)]
        vec = [0] * n
        for c, x in enumerate(col):
            if x:
                for i in range(n):
                    w = W[i][r + c]
                    if w:
                        vec[i] += x * w
        if modulus:
            vec = [v % modulus for v in vec]
        gens.append(vec)
    for i in tors_idx:
        gens.append([W[row][i] for row in range(n)])

    out_sparse = _sparse_rows(outgoing)

    def coords(z: list[int]) -> list[int]:
        if len(z) != n:
            raise ValueError(f"expected a vector of length {n}, got {len(z)}")
        for row in out_sparse:
            s = sum(x * z[j] for j, x in row)
            if (s % modulus) if modulus else s:
                raise ValueError("vector is not a (co)cycle")
        y = [sum(U[i][j] * z[j] for j in range(n) if z[j]) for i in range(n)]
        tail = y[r:]
        w = [sum(V2i[a][b] * tail[b] for b in range(rest) if tail[b]) for a in range(rest)]
        out = w[r2:] + [y[i] for i in tors_idx]
        if modulus:
            out = [x % modulus for x in out]
        return out

    if modulus:
        return FgAbelianGroup(0, (modulus,) * free if modulus == 2 else (), generators=gens,
                              coordinate_map=coords, coefficients=modulus, ambient_dim=n,
                              **meta)
    return FgAbelianGroup(free, torsion, generators=gens, coordinate_map=coords,
                          ambient_dim=n, **meta)


def homology(p: ChainPresentation, k: int, coeffs="Z") -> FgAbelianGroup:
    """H_k = ker d_k / im d_{k+1}."""
    if k not in range(4):
        raise ValueError(f"degree must be 0..3, got {k}")
    mod = _coeff(coeffs)
    key = ("H_", k, mod)
    if key not in p._cache:
        rows, n = p.boundary_shape(k)
        _, in_cols = p.boundary_shape(k + 1)
        p._cache[key] = subquotient(p.boundary(k), rows, p.boundary(k + 1), n, in_cols, mod,
                                    owner=p, degree=k, kind="homology")
    return p._cache[key]


def coboundary(p: ChainPresentation, k: int) -> tuple[list[list[int]], int, int]:
    """delta^k : C^k -> C^{k+1} as (matrix, rows, cols)."""
    rows, cols = p.boundary_shape(k + 1)
    return transpose(p.boundary(k + 1), cols), cols, rows


def cohomology(p: ChainPresentation, k: int, coeffs="Z") -> FgAbelianGroup:
    """H^k = ker delta^k / im delta^{k-1}, with delta^k the transpose of d_{k+1}."""
    if k not in range(4):
        raise ValueError(f"degree must be 0..3, got {k}")
    mod = _coeff(coeffs)
    key = ("H^", k, mod)
    if key not in p._cache:
        out, out_rows, n = coboundary(p, k)
        inc, _, in_cols = coboundary(p, k - 1) if k > 0 else ([[] for _ in range(n)], n, 0)
        p._cache[key] = subquotient(out, out_rows, inc, n, in_cols, mod,
                                    owner=p, degree=k, kind="cohomology")
    return p._cache[key]


def alpha(p: ChainPresentation) -> int:
    """Dimension of (torsion of H_1) tensor Z/2: the number of even torsion coefficients."""
    return homology(p, 1).even_torsion_count


@dataclass
class DualityReport:
    passed: bool
    degrees: list[dict] = field(default_factory=list)


def verify_duality(p: ChainPresentation) -> DualityReport:
    """Compare H_k with H^{3-k} as abstract groups for k = 0..3."""
    rows = []
    for k in range(4):
        h = homology(p, k)
        c = cohomology(p, 3 - k)
        rows.append({"k": k, "homology": h.invariants, "cohomology": c.invariants,
                     "match": h.isomorphic(c)})
    return DualityReport(all(r["match"] for r in rows), rows)


def universal_coefficient_check(p: ChainPresentation) -> list[tuple[int, int, int]]:
    """(k, dim H^k(;Z/2), predicted) for each degree; predicted from integral cohomology."""
    out = []
    for k in range(4):
        hk = cohomology(p, k)
        nxt = cohomology(p, k + 1).even_torsion_count if k < 3 else 0
        predicted = hk.free_rank + hk.even_torsion_count + nxt
        out.append((k, len(cohomology(p, k, "Z2").torsion), predicted))
    return out
