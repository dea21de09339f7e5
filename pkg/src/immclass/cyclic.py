"""Residues in Z/m, with m = 0 standing for the infinite cyclic group Z."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CyclicValue:
    modulus: int
    value: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError(f"modulus must be non-negative, got {self.modulus}")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __str__(self):
        if self.modulus == 0:
            return f"{self.value} in Z"
        return f"{self.value} mod {self.modulus}"

    def _check(self, other: CyclicValue) -> None:
        if not isinstance(other, CyclicValue):
            raise TypeError(f"expected CyclicValue, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ValueError(f"modulus mismatch: Z/{self.modulus} vs Z/{other.modulus}")

    def __add__(self, other):
        if isinstance(other, int):
            return CyclicValue(self.modulus, self.value + other)
        self._check(other)
        return CyclicValue(self.modulus, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return CyclicValue(self.modulus, self.value - other)
        self._check(other)
        return CyclicValue(self.modulus, self.value - other.value)

    def __neg__(self):
        return CyclicValue(self.modulus, -self.value)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return CyclicValue(self.modulus, self.value * k)

    __rmul__ = __mul__

    def reduce(self, modulus: int) -> CyclicValue:
        """Image under the quotient Z/m -> Z/modulus; needs ``modulus | m``."""
        if not divides(modulus, self.modulus):
            raise ValueError(f"Z/{self.modulus} does not surject onto Z/{modulus}")
        return CyclicValue(modulus, self.value)

    @property
    def is_even(self) -> bool:
        """Lies in the image of multiplication by two (parity is only defined for even or zero moduli)."""
        if self.modulus % 2:
            return True
        return self.value % 2 == 0

    def half(self) -> CyclicValue:
        """The isomorphism 2Z/4d -> Z/2d (and 2Z -> Z when the modulus is 0)."""
        if self.modulus % 4 and self.modulus:
            raise ValueError(f"halving needs a modulus divisible by 4, got {self.modulus}")
        if self.value % 2:
            raise ValueError(f"{self} is odd and has no half")
        return CyclicValue(self.modulus // 2, self.value // 2)

    def order(self) -> int | None:
        """Cardinality of the group; ``None`` for Z."""
        return self.modulus or None


def divides(a: int, b: int) -> bool:
    """``a | b`` with the conventions 0 | 0 and a | 0 for all a."""
    if a == 0:
        return b == 0
    return b % a == 0
