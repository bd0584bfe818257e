"""Exact arithmetic in Z_N, carried per value.

Every :class:`Residue` knows its own modulus, so values from different
dimensions can live in one program; combining them is an error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ModulusMismatchError, NotInvertibleError, NotPrimeError


@dataclass(frozen=True, order=True)
class Residue:
    """An element ``value mod modulus`` with ``0 <= value < modulus``."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _coerce(self, other) -> Residue:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"cannot combine residues mod {self.modulus} and mod {other.modulus}")
            return other
        if isinstance(other, int):
            return Residue(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} mod {self.modulus}"

    def is_zero(self) -> bool:
        return self.value == 0

    def inverse(self) -> Residue:
        return inverse(self)


def add(x: Residue, y: Residue) -> Residue:
    return x + y


def mul(x: Residue, y: Residue) -> Residue:
    return x * y


def inverse(x: Residue) -> Residue:
    """Multiplicative inverse of ``x``.

    Raises
    ------
    NotInvertibleError
        If ``gcd(x.value, N) != 1`` (zero, or a zero divisor for composite N).
    """
    if math.gcd(x.value, x.modulus) != 1:
        raise NotInvertibleError(f"{x!r} is not invertible")
    return Residue(pow(x.value, -1, x.modulus), x.modulus)


def solve_linear(coeff: Residue, rhs: Residue) -> Residue:
    """The unique ``k`` with ``coeff * k == rhs (mod N)``."""
    if coeff.modulus != rhs.modulus:
        raise ModulusMismatchError(
            f"cannot combine residues mod {coeff.modulus} and mod {rhs.modulus}")
    return inverse(coeff) * rhs


def is_prime(n: int) -> bool:
    """Deterministic trial division; exact for any ``n >= 2``."""
    if n < 2:
        raise ValueError(f"is_prime requires n >= 2, got {n}")
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def require_prime(n: int, what: str = "this operation") -> None:
    """Raise :class:`~primemub.errors.NotPrimeError` unless ``n`` is prime."""
    if n < 2 or not is_prime(n):
        raise NotPrimeError(f"{what} requires a prime dimension, got N={n}")


def residues(n: int) -> list[Residue]:
    """All elements of Z_n in increasing order."""
    return [Residue(v, n) for v in range(n)]
