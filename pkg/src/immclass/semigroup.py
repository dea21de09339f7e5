"""Connected sum on complete invariants (c, i).

H^2 of a connected sum is the direct sum of the summands' H^2, the Wu classes
add as a direct sum, d of the new normal Euler class is the gcd of the two d
values, and the fiber invariants are reduced to the new modulus and added.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from immclass.cyclic import CyclicValue
from immclass.groups import FgAbelianGroup


@dataclass(frozen=True)
class HomologySummary:
    """H^1 and H^2 as direct sums of cyclic factors (modulus 0 is Z); H^3 is always Z.

    Factors are kept sorted so the direct sum is literally commutative; the
    Wu class is stored factor by factor alongside, see ``SemigroupElement``.
    """

    h1: tuple[int, ...] = ()
    h2: tuple[int, ...] = ()

    def h1_group(self) -> FgAbelianGroup:
        return FgAbelianGroup.from_cyclic_factors(self.h1)

    def h2_group(self) -> FgAbelianGroup:
        return FgAbelianGroup.from_cyclic_factors(self.h2)


@dataclass(frozen=True)
class SemigroupElement:
    """A class [f] in I(3,5) seen through its invariants.

    ``c`` pairs each H^2 factor with the Wu-class coordinate on it, as a sorted
    tuple of (modulus, coordinate). ``d`` is d(chi) for chi = 2c and ``i``
    lives in Z/2d.
    """

    h1: tuple[int, ...]
    c: tuple[tuple[int, int], ...]
    d: int
    i: CyclicValue

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("d must be non-negative")
        if self.i.modulus != 2 * self.d:
            raise ValueError(f"i must live in Z/{2 * self.d}, got Z/{self.i.modulus}")
        c = tuple(sorted((m, x % m if m else x) for m, x in self.c))
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "h1", tuple(sorted(self.h1)))

    @property
    def summary(self) -> HomologySummary:
        return HomologySummary(self.h1, tuple(m for m, _ in self.c))

    @classmethod
    def from_class(cls, h1: Sequence[int], h2: Sequence[int], c: Sequence[int],
                   i: int) -> SemigroupElement:
        """Element over a manifold with the given cyclic factors; d is computed from c."""
        if len(h2) != len(c):
            raise ValueError("one Wu coordinate is needed per H^2 factor")
        g = 0
        for m, x in zip(h2, c):
            if m == 0:
                g = gcd(g, 2 * x)
        return cls(tuple(h1), tuple(zip(h2, c)), g, CyclicValue(2 * g, i))

    @classmethod
    def bare(cls, d: int, i: int) -> SemigroupElement:
        """Pure invariant arithmetic with no homology attached."""
        return cls((), (), d, CyclicValue(2 * d, i))


def sphere(n: int = 0) -> SemigroupElement:
    """The immersion of S^3 with i = n; n = 0 is the neutral element."""
    return SemigroupElement((), (), 0, CyclicValue(0, n))


def connected_sum(a: SemigroupElement, b: SemigroupElement) -> SemigroupElement:
    d = gcd(a.d, b.d)
    m = 2 * d
    i = a.i.reduce(m) + b.i.reduce(m)
    return SemigroupElement(a.h1 + b.h1, a.c + b.c, d, i)


def sum_with_sphere(a: SemigroupElement, n: int) -> SemigroupElement:
    """Connected sum with the sphere immersion of invariant n: c is kept, i shifts by n."""
    return SemigroupElement(a.h1, a.c, a.d, a.i + n)


def sphere_orbit(a: SemigroupElement, limit: int | None = None) -> set[int]:
    """Fiber values reached by summing with spheres; all of Z/2d when d > 0."""
    m = a.i.modulus
    if m == 0:
        if limit is None:
            raise ValueError("the orbit in Z is infinite; pass a limit")
        return {sum_with_sphere(a, n).i.value for n in range(-limit, limit + 1)}
    return {sum_with_sphere(a, n).i.value for n in range(m)}
