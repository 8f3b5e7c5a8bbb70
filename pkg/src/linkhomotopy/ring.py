"""Arithmetic in Z_k[t^{+-1}]/(1-t)^2 using the pair encoding.

An element is stored as ``(a, b)`` meaning ``a + b*(1-t)``.  Writing
``e = 1 - t`` we have ``e**2 = 0``, so the ring is the dual numbers over
``Z_k`` and ``t = 1 - e`` is a unit with inverse ``1 + e``.

``modulus == 0`` selects exact integer coefficients (the ring Z[t^{+-1}]/(1-t)^2).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class AlexPair:
    a: int
    b: int
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be non-negative")
        if self.modulus:
            object.__setattr__(self, "a", self.a % self.modulus)
            object.__setattr__(self, "b", self.b % self.modulus)

    @classmethod
    def zero(cls, modulus=0):
        return cls(0, 0, modulus)

    @classmethod
    def one(cls, modulus=0):
        return cls(1, 0, modulus)

    @classmethod
    def t(cls, modulus=0):
        return cls(1, -1, modulus)

    @classmethod
    def eps(cls, modulus=0):
        """The nilpotent element 1 - t."""
        return cls(0, 1, modulus)

    def _coerce(self, other) -> "AlexPair":
        if isinstance(other, AlexPair):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ: %d vs %d" % (self.modulus, other.modulus))
            return other
        if isinstance(other, int):
            return AlexPair(other, 0, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlexPair(self.a + other.a, self.b + other.b, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return AlexPair(-self.a, -self.b, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlexPair(self.a - other.a, self.b - other.b, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlexPair(self.a * other.a, self.a * other.b + self.b * other.a, self.modulus)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        if self.modulus == 0:
            return self.a in (1, -1)
        from math import gcd

        return gcd(self.a, self.modulus) == 1

    def triangle(self, other: "AlexPair") -> "AlexPair":
        """Alexander quandle operation ``t*x + (1-t)*y``."""
        other = self._coerce(other)
        return AlexPair(self.a, self.b - self.a + other.a, self.modulus)

    def triangle_inv(self, other: "AlexPair") -> "AlexPair":
        """Inverse right action: the unique z with ``z.triangle(other) == self``."""
        other = self._coerce(other)
        return AlexPair(self.a, self.b + self.a - other.a, self.modulus)

    def as_tuple(self):
        return (self.a, self.b)

    def __str__(self):
        if self.a == 0 and self.b == 0:
            return "0"
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b:
            coeff = "" if self.b == 1 else ("-" if self.b == -1 else str(self.b))
            parts.append("%s(1-t)" % coeff)
        return " + ".join(parts).replace("+ -", "- ")


def elements(modulus: int):
    """All k**2 elements in lexicographic (a, b) order."""
    return [AlexPair(a, b, modulus) for a in range(modulus) for b in range(modulus)]


def pair_index(x: AlexPair) -> int:
    return x.a * x.modulus + x.b
