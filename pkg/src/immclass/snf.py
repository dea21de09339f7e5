"""Smith normal form over the integers (or over GF(2)) with unimodular transforms.

Matrices are plain lists of rows holding Python ints, so every entry is exact
no matter how large intermediate values grow.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

Matrix = list  # list[list[int]]

# Re-check U*A*V == S after every call; the test suite switches this on.
VERIFY = os.environ.get("IMMCLASS_VERIFY_SNF", "") not in ("", "0")


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def matmul(A: Matrix, B: Matrix, ncols: int | None = None) -> Matrix:
    """Product of two integer matrices; skips zero entries of ``A``."""
    if ncols is None:
        ncols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * ncols
        for k, a in enumerate(row):
            if a:
                brow = B[k]
                for j in range(ncols):
                    b = brow[j]
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def transpose(A: Matrix, ncols: int) -> Matrix:
    return [[A[i][j] for i in range(len(A))] for j in range(ncols)]


def determinant(A: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass
class SnfResult:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal.

    ``U_inv`` and ``V_inv`` are carried along because homology generators are
    read off the columns of ``U_inv``.
    """

    U: Matrix
    V: Matrix
    S: Matrix
    U_inv: Matrix
    V_inv: Matrix
    nrows: int
    ncols: int
    modulus: int = 0

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(self.nrows, self.ncols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d]

    def verify(self, A: Matrix) -> None:
        m, n, mod = self.nrows, self.ncols, self.modulus
        lhs = matmul(matmul(self.U, A, n), self.V, n)
        if mod:
            lhs = [[x % mod for x in row] for row in lhs]
        if lhs != self.S:
            raise AssertionError("U*A*V != S")
        for X, Xi, k in ((self.U, self.U_inv, m), (self.V, self.V_inv, n)):
            prod = matmul(X, Xi, k)
            if mod:
                prod = [[x % mod for x in row] for row in prod]
            if prod != identity(k):
                raise AssertionError("transform inverse mismatch")
        diag = self.diagonal
        for i, d in enumerate(diag):
            if d < 0:
                raise AssertionError("negative invariant factor")
            if i + 1 < len(diag) and diag[i + 1] and (d == 0 or diag[i + 1] % d):
                raise AssertionError("diagonal is not a divisor chain")
        for i in range(m):
            for j in range(n):
                if i != j and self.S[i][j]:
                    raise AssertionError("S is not diagonal")


class _Reducer:
    """Elementary row/column operations that keep all four transforms in sync."""

    def __init__(self, A: Matrix, nrows: int, ncols: int, modulus: int):
        self.mod = modulus
        if modulus:
            self.D = [[x % modulus for x in row] for row in A]
        else:
            self.D = [list(row) for row in A]
        self.m, self.n = nrows, ncols
        self.U, self.Ui = identity(nrows), identity(nrows)
        self.V, self.Vi = identity(ncols), identity(ncols)

    def _fix(self, row: list[int]) -> None:
        mod = self.mod
        if mod:
            for j, x in enumerate(row):
                if x and (x >= mod or x < 0):
                    row[j] = x % mod

    def swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        D, U = self.D, self.U
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]
        for row in self.Ui:
            row[i], row[k] = row[k], row[i]

    def swap_cols(self, j: int, l: int) -> None:
        if j == l:
            return
        for row in self.D:
            row[j], row[l] = row[l], row[j]
        for row in self.V:
            row[j], row[l] = row[l], row[j]
        Vi = self.Vi
        Vi[j], Vi[l] = Vi[l], Vi[j]

    def add_row(self, k: int, t: int, q: int) -> None:
        """row_k += q * row_t"""
        if not q:
            return
        for M in (self.D, self.U):
            src, dst = M[t], M[k]
            for j, x in enumerate(src):
                if x:
                    dst[j] += q * x
            self._fix(dst)
        mod = self.mod
        for row in self.Ui:
            x = row[k]
            if x:
                row[t] -= q * x
                if mod:
                    row[t] %= mod

    def add_col(self, l: int, t: int, q: int) -> None:
        """col_l += q * col_t"""
        if not q:
            return
        mod = self.mod
        for M in (self.D, self.V):
            for row in M:
                x = row[t]
                if x:
                    row[l] += q * x
                    if mod:
                        row[l] %= mod
        src, dst = self.Vi[l], self.Vi[t]
        for j, x in enumerate(src):
            if x:
                dst[j] -= q * x
        self._fix(dst)

    def negate_row(self, t: int) -> None:
        self.D[t] = [-x for x in self.D[t]]
        self.U[t] = [-x for x in self.U[t]]
        for row in self.Ui:
            row[t] = -row[t]


def _find_pivot(D: Matrix, t: int, m: int, n: int) -> tuple[int, int] | None:
    # Minimal |entry|, ties to the lowest row then lowest column.
    best = None
    best_abs = 0
    for i in range(t, m):
        row = D[i]
        for j in range(t, n):
            x = row[j]
            if x:
                a = x if x > 0 else -x
                if best is None or a < best_abs:
                    best, best_abs = (i, j), a
                    if a == 1:
                        return best
    return best


def smith_normal_form(A: Matrix, nrows: int | None = None, ncols: int | None = None,
                      modulus: int = 0) -> SnfResult:
    """Smith normal form of ``A``.

    ``modulus=0`` works over the integers; ``modulus=2`` over GF(2). Shapes
    must be passed explicitly when ``A`` has no rows.
    """
    if nrows is None:
        nrows = len(A)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if modulus not in (0, 2):
        raise ValueError("modulus must be 0 (integers) or 2")
    R = _Reducer(A, nrows, ncols, modulus)
    D = R.D
    m, n = nrows, ncols
    for t in range(min(m, n)):
        piv = _find_pivot(D, t, m, n)
        if piv is None:
            break
        R.swap_rows(t, piv[0])
        R.swap_cols(t, piv[1])
        while True:
            dirty = False
            for k in range(t + 1, m):
                x = D[k][t]
                if x:
                    q = x // D[t][t]
                    R.add_row(k, t, -q)
                    if D[k][t]:
                        R.swap_rows(t, k)
                        dirty = True
            for l in range(t + 1, n):
                x = D[t][l]
                if x:
                    q = x // D[t][t]
                    R.add_col(l, t, -q)
                    if D[t][l]:
                        R.swap_cols(t, l)
                        dirty = True
            if dirty:
                continue
            p = D[t][t]
            if modulus or p in (1, -1):
                break
            bad = next((k for k in range(t + 1, m)
                        if any(x % p for x in D[k][t + 1:n])), None)
            if bad is None:
                break
            R.add_row(t, bad, 1)
        if D[t][t] < 0:
            R.negate_row(t)
    res = SnfResult(R.U, R.V, D, R.Ui, R.Vi, m, n, modulus)
    if VERIFY:
        res.verify(A if not modulus else [[x % modulus for x in row] for row in A])
    return res


def kernel_basis(A: Matrix, nrows: int, ncols: int, modulus: int = 0) -> list[list[int]]:
    """A basis of ``{x : A x = 0}`` (as a saturated lattice over the integers)."""
    res = smith_normal_form(A, nrows, ncols, modulus)
    r = res.rank
    return [[res.V[i][j] for i in range(ncols)] for j in range(r, ncols)]
