"""Independent reference computations used to freeze expected values.

Nothing here imports the package under test.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def det(M):
    """Cofactor expansion; fine for the <= 6x6 minors used here."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * det(minor)
    return total


def determinantal_divisors(A, nrows, ncols):
    """D_k = gcd of all k x k minors, for k = 1..min(m, n)."""
    out = []
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for rows in combinations(range(nrows), k):
            for cols in combinations(range(ncols), k):
                g = gcd(g, det([[A[r][c] for c in cols] for r in rows]))
        out.append(g)
    return out


def invariant_factors(A, nrows, ncols):
    """Nonzero invariant factors d_k = D_k / D_{k-1}."""
    prev = 1
    out = []
    for D in determinantal_divisors(A, nrows, ncols):
        if D == 0:
            break
        out.append(D // prev)
        prev = D
    return out


def rank_q(A, nrows, ncols):
    if nrows * ncols > 4000:
        # exact rational elimination is too slow at this size; a large prime
        # gives the rational rank unless it divides one of the minors
        return rank_mod(A, nrows, ncols, 2_147_483_647)
    M = [[Fraction(A[i][j]) for j in range(ncols)] for i in range(nrows)]
    return _rank(M, nrows, ncols, lambda x: x == 0, lambda a, b: a / b)


def rank_mod(A, nrows, ncols, p):
    M = [[A[i][j] % p for j in range(ncols)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        r += 1
    return r


def _rank(M, nrows, ncols, is_zero, div):
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not is_zero(M[i][c])), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(nrows):
            if i != r and not is_zero(M[i][c]):
                f = div(M[i][c], M[r][c])
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
    return r


def homology_ranks(boundaries, cells, p=None):
    """Betti numbers (over Q, or over F_p) from boundary matrices d_k of shape n_{k-1} x n_k."""
    def rk(k):
        if k < 1 or k > len(cells) - 1:
            return 0
        A = boundaries[k - 1]
        if p is None:
            return rank_q(A, cells[k - 1], cells[k])
        return rank_mod(A, cells[k - 1], cells[k], p)
    return [cells[k] - rk(k) - rk(k + 1) for k in range(len(cells))]


def boundary_matrices(tets):
    """Plain simplicial boundary matrices of the closure of oriented tetrahedra (sorted vertices)."""
    tets = [tuple(sorted(t)) for t in tets]
    faces = {3: sorted(set(tets))}
    for k in (2, 1, 0):
        faces[k] = sorted({f for s in faces[k + 1] for f in combinations(s, k + 1)})
    idx = {k: {s: i for i, s in enumerate(faces[k])} for k in faces}
    mats = []
    for k in (1, 2, 3):
        M = [[0] * len(faces[k]) for _ in faces[k - 1]]
        for j, s in enumerate(faces[k]):
            for i in range(len(s)):
                M[idx[k - 1][s[:i] + s[i + 1:]]][j] += (-1) ** i
        mats.append(M)
    return mats, [len(faces[k]) for k in range(4)]


def brute_halves(moduli, chi, bound):
    """All c in the coordinate box with 2c = chi (free coordinates |c_i| <= bound)."""
    from itertools import product
    ranges = [range(-bound, bound + 1) if m == 0 else range(m) for m in moduli]
    hits = []
    for c in product(*ranges):
        if all((2 * x - y) % m == 0 if m else 2 * x == y for x, y, m in zip(c, chi, moduli)):
            hits.append(tuple(c))
    return hits
