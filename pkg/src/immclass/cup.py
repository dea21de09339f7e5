"""The cup pairing H^1 x H^2 -> H^3 and the index of 2*chi cup H^1 in H^3 = Z."""
from __future__ import annotations

from math import gcd

from immclass.complex_core import ChainPresentation, PresentationError
from immclass.groups import GroupClass
from immclass.homology import coboundary, cohomology
from immclass.snf import kernel_basis


class CupError(ValueError):
    pass


class CupPairing:
    """Cochain-level product C^1 x C^2 -> C^3 given by a sparse tensor.

    In ``simplicial`` mode the tensor is the Alexander-Whitney front/back face
    product on ascending vertex order: (a cup b)(v0v1v2v3) = a(v0v1) b(v1v2v3).
    In ``tensor`` mode it is the presentation's ``cup_tensor``, which must
    descend to cohomology; that is checked here.
    """

    def __init__(self, presentation: ChainPresentation, mode: str | None = None):
        p = presentation
        if mode is None:
            mode = "simplicial" if p.simplices is not None else "tensor"
        self.presentation = p
        self.mode = mode
        if mode == "simplicial":
            if p.simplices is None:
                raise CupError("simplicial mode needs a presentation built from a triangulation")
            _, edges, tris, tets = p.simplices
            e_idx = {s: i for i, s in enumerate(edges)}
            t_idx = {s: i for i, s in enumerate(tris)}
            self.tensor = [(e_idx[t[:2]], t_idx[t[1:]], i, 1) for i, t in enumerate(tets)]
            self.tensor_21 = [(t_idx[t[:3]], e_idx[t[2:]], i, 1) for i, t in enumerate(tets)]
        elif mode == "tensor":
            if p.cup_tensor is None:
                raise CupError("presentation carries no cup tensor")
            self.tensor = list(p.cup_tensor)
            self.tensor_21 = None
            self.check_descent()
        else:
            raise ValueError(f"unknown cup mode {mode!r}")

    def cup_cochains(self, a: list[int], b: list[int]) -> list[int]:
        out = [0] * self.presentation.cells[3]
        for e, t, tet, c in self.tensor:
            x = a[e]
            if x:
                y = b[t]
                if y:
                    out[tet] += c * x * y
        return out

    def cup_cochains_21(self, b: list[int], a: list[int]) -> list[int]:
        """(b cup a)(v0v1v2v3) = b(v0v1v2) a(v2v3); simplicial mode only."""
        if self.tensor_21 is None:
            raise CupError("the 2 x 1 product is only available in simplicial mode")
        out = [0] * self.presentation.cells[3]
        for t, e, tet, c in self.tensor_21:
            if b[t] and a[e]:
                out[tet] += c * b[t] * a[e]
        return out

    def check_descent(self) -> None:
        """Cup of a coboundary with a cocycle (either side) must be a coboundary."""
        p = self.presentation
        n = p.cells
        h3 = cohomology(p, 3)
        d0, _, _ = coboundary(p, 0)   # n1 x n0
        d1, _, _ = coboundary(p, 1)   # n2 x n1
        d2, r2, _ = coboundary(p, 2)  # n3 x n2
        z1 = kernel_basis(d1, n[2], n[1])
        z2 = kernel_basis(d2, r2, n[2])
        b1 = [[d0[i][v] for i in range(n[1])] for v in range(n[0])]
        b2 = [[d1[i][e] for i in range(n[2])] for e in range(n[1])]
        for x in b1:
            for z in z2:
                if not h3.classify(self.cup_cochains(x, z)).is_zero:
                    raise PresentationError("cup tensor does not descend: "
                                            "coboundary cup cocycle is not a coboundary")
        for z in z1:
            for y in b2:
                if not h3.classify(self.cup_cochains(z, y)).is_zero:
                    raise PresentationError("cup tensor does not descend: "
                                            "cocycle cup coboundary is not a coboundary")


def cup_pairing(p: ChainPresentation) -> CupPairing:
    if "cup" not in p._cache:
        p._cache["cup"] = CupPairing(p)
    return p._cache["cup"]


def _owned(cls: GroupClass, p: ChainPresentation | None, degree: int) -> ChainPresentation:
    g = cls.group
    if g.kind != "cohomology" or g.degree != degree or g.coefficients:
        raise CupError(f"expected an integral class of H^{degree}")
    if p is not None and g.owner is not p:
        raise CupError("classes come from different presentations")
    return g.owner


def _is_cocycle(p: ChainPresentation, k: int, vec: list[int]) -> bool:
    d, rows, cols = coboundary(p, k)
    return all(sum(x * vec[j] for j, x in enumerate(row) if x) == 0 for row in d)


def cup_cocycles(pairing: CupPairing, a: list[int], b: list[int]) -> GroupClass:
    """Cup of cocycle representatives, projected to H^3."""
    p = pairing.presentation
    if not _is_cocycle(p, 1, a) or not _is_cocycle(p, 2, b):
        raise CupError("representative is not a cocycle")
    return cohomology(p, 3).classify(pairing.cup_cochains(a, b))


def cup_1_2(pairing: CupPairing, a: GroupClass, b: GroupClass) -> GroupClass:
    p = _owned(a, pairing.presentation, 1)
    _owned(b, p, 2)
    ra = a.group.representative(a)
    rb = b.group.representative(b)
    return cohomology(p, 3).classify(pairing.cup_cochains(ra, rb))


def cup_2_1(pairing: CupPairing, b: GroupClass, a: GroupClass) -> GroupClass:
    p = _owned(a, pairing.presentation, 1)
    _owned(b, p, 2)
    rb, ra = b.group.representative(b), a.group.representative(a)
    return cohomology(p, 3).classify(pairing.cup_cochains_21(rb, ra))


def pair_with_fundamental(cls: GroupClass) -> int:
    """<cls, [M]> for a class of H^3."""
    p = _owned(cls, None, 3)
    rep = cls.group.representative(cls)
    return sum(x * y for x, y in zip(rep, p.fundamental_cycle))


def pairing_matrix(p: ChainPresentation) -> list[list[int]]:
    """Entry (j, l) is <x_j cup y_l, [M]> for normal-form bases x of H^1, y of H^2."""
    if "pairing" not in p._cache:
        cp = cup_pairing(p)
        h1, h2 = cohomology(p, 1), cohomology(p, 2)
        p._cache["pairing"] = [[pair_with_fundamental(cup_1_2(cp, x, y)) for y in h2.basis()]
                               for x in h1.basis()]
    return p._cache["pairing"]


def index_two_chi_cup_h1(chi: GroupClass) -> int:
    """Index of {<2 chi cup x, [M]> : x in H^1} in Z; 0 when that subgroup is trivial."""
    p = _owned(chi, None, 2)
    P = pairing_matrix(p)
    g = 0
    for row in P:
        g = gcd(g, 2 * sum(a * c for a, c in zip(row, chi.coords)))
    return g
