"""Finitely generated abelian groups in invariant-factor normal form.

A group is Z^r + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k, each t_i >= 2.
Elements are coordinate vectors, free coordinates first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

from immclass.snf import smith_normal_form


class FgAbelianGroup:
    """Normal form plus (optionally) a map to and from an ambient lattice.

    When the group was computed from a chain or cochain complex, ``generators``
    holds one ambient vector per normal-form generator and ``_coords`` turns
    an ambient (co)cycle back into coordinates.
    """

    def __init__(self, free_rank: int, torsion: Sequence[int] = (), *,
                 generators: list[list[int]] | None = None, coordinate_map=None,
                 owner=None, degree: int | None = None, kind: str | None = None,
                 coefficients: int = 0, ambient_dim: int | None = None):
        torsion = tuple(torsion)
        if any(t < 2 for t in torsion):
            raise ValueError(f"torsion coefficients must be >= 2: {torsion}")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {torsion} is not a divisor chain")
        self.free_rank = free_rank
        self.torsion = torsion
        self.generators = generators
        self._coords = coordinate_map
        self.owner = owner
        self.degree = degree
        self.kind = kind
        self.coefficients = coefficients
        self.ambient_dim = ambient_dim

    @classmethod
    def from_cyclic_factors(cls, moduli: Sequence[int]) -> FgAbelianGroup:
        """Normal form of a direct sum of cyclic groups (modulus 0 means Z)."""
        free = sum(1 for m in moduli if m == 0)
        finite = [m for m in moduli if m not in (0, 1)]
        if not finite:
            return cls(free)
        diag = [[m if i == j else 0 for j in range(len(finite))] for i, m in enumerate(finite)]
        factors = smith_normal_form(diag).invariant_factors
        return cls(free, [f for f in factors if f != 1])

    @property
    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return (self.free_rank, self.torsion)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Order of each coordinate, 0 for free coordinates."""
        return (0,) * self.free_rank + self.torsion

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    @property
    def even_torsion_count(self) -> int:
        return sum(1 for t in self.torsion if t % 2 == 0)

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FgAbelianGroup({self.free_rank}, {self.torsion})"

    def isomorphic(self, other: FgAbelianGroup) -> bool:
        return self.invariants == other.invariants

    def element(self, coords: Sequence[int]) -> GroupClass:
        return GroupClass(self, tuple(coords))

    def zero(self) -> GroupClass:
        return GroupClass(self, (0,) * self.ngens)

    def basis(self) -> list[GroupClass]:
        n = self.ngens
        return [self.element([int(i == j) for j in range(n)]) for i in range(n)]

    def window(self, bound: int) -> Iterator[GroupClass]:
        """Classes whose free coordinates lie in [-bound, bound]; all torsion residues."""
        ranges = [range(-bound, bound + 1)] * self.free_rank + [range(t) for t in self.torsion]
        for coords in itertools.product(*ranges):
            yield GroupClass(self, coords)

    def classify(self, vector: Sequence[int]) -> GroupClass:
        """The class of an ambient (co)cycle."""
        if self._coords is None:
            raise ValueError("group carries no basis map")
        return GroupClass(self, tuple(self._coords(list(vector))))

    def representative(self, cls: GroupClass) -> list[int]:
        """An ambient (co)cycle representing ``cls``."""
        if cls.group is not self:
            raise ValueError("class belongs to a different group")
        if self.generators is None:
            raise ValueError("group carries no basis map")
        out = [0] * self.ambient_dim
        for c, g in zip(cls.coords, self.generators):
            if c:
                for i, x in enumerate(g):
                    if x:
                        out[i] += c * x
        if self.coefficients:
            out = [x % self.coefficients for x in out]
        return out


@dataclass(frozen=True)
class GroupClass:
    group: FgAbelianGroup = field(compare=False)
    coords: tuple[int, ...]

    def __post_init__(self):
        g = self.group
        if len(self.coords) != g.ngens:
            raise ValueError(f"expected {g.ngens} coordinates for {g}, got {len(self.coords)}")
        reduced = tuple(c % m if m else c for c, m in zip(self.coords, g.moduli))
        object.__setattr__(self, "coords", reduced)

    def __eq__(self, other):
        if not isinstance(other, GroupClass):
            return NotImplemented
        return self.group is other.group and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.group), self.coords))

    def _same(self, other: GroupClass) -> None:
        if not isinstance(other, GroupClass) or other.group is not self.group:
            raise ValueError("classes live in different groups")

    def __add__(self, other: GroupClass) -> GroupClass:
        self._same(other)
        return GroupClass(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: GroupClass) -> GroupClass:
        self._same(other)
        return GroupClass(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GroupClass:
        return GroupClass(self.group, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> GroupClass:
        if not isinstance(k, int):
            return NotImplemented
        return GroupClass(self.group, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def free_coords(self) -> tuple[int, ...]:
        return self.coords[: self.group.free_rank]

    @property
    def torsion_coords(self) -> tuple[int, ...]:
        return self.coords[self.group.free_rank:]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_torsion(self) -> bool:
        return not any(self.free_coords)

    def __str__(self):
        return "(" + ", ".join(map(str, self.coords)) + ")"


def divisibility(chi: GroupClass) -> int:
    """d(chi): chi is d times a primitive class modulo torsion; 0 for torsion classes."""
    g = 0
    for c in chi.free_coords:
        g = gcd(g, c)
    return g


def halves(chi: GroupClass) -> list[GroupClass]:
    """All c with 2c = chi.

    In normal-form coordinates doubling is diagonal, so the equation splits:
    on Z it needs an even coordinate; on Z/t with t odd it has the single
    solution chi * 2^{-1}; on Z/t with t even it needs an even residue and has
    the two solutions chi/2 and chi/2 + t/2.
    """
    group = chi.group
    choices: list[list[int]] = []
    for x, m in zip(chi.coords, group.moduli):
        if m == 0:
            if x % 2:
                return []
            choices.append([x // 2])
        elif m % 2:
            choices.append([(x * pow(2, -1, m)) % m])
        else:
            if x % 2:
                return []
            choices.append([x // 2, x // 2 + m // 2])
    return [GroupClass(group, coords) for coords in itertools.product(*choices)]
