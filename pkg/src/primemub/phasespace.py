"""Finite phase space Z_N x Z_N, its class partition and the SL(2, Z_N) action.

Points are row vectors; matrices act from the right, ``(i, j) -> (i, j) M``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import ModulusMismatchError, MubError
from .zmod import Residue, inverse, require_prime, solve_linear


@dataclass(frozen=True, order=True)
class PhasePoint:
    """A point ``(i, j)``; labels the coset ``Q^i P^j``."""

    i: Residue
    j: Residue

    def __post_init__(self):
        if self.i.modulus != self.j.modulus:
            raise ModulusMismatchError("phase point coordinates must share one modulus")

    @classmethod
    def of(cls, n: int, i: int, j: int) -> PhasePoint:
        return cls(Residue(i, n), Residue(j, n))

    @property
    def n(self) -> int:
        return self.i.modulus

    def as_tuple(self) -> tuple[int, int]:
        return (self.i.value, self.j.value)

    def is_zero(self) -> bool:
        return self.i.is_zero() and self.j.is_zero()

    def __add__(self, other: PhasePoint) -> PhasePoint:
        return PhasePoint(self.i + other.i, self.j + other.j)

    def scale(self, r: Residue | int) -> PhasePoint:
        return PhasePoint(self.i * r, self.j * r)

    def __matmul__(self, m: SL2Matrix) -> PhasePoint:
        return act(self, m)

    def __repr__(self) -> str:
        return f"({self.i.value},{self.j.value})"


class NotSpecialLinearError(MubError):
    """Matrix entries do not have determinant 1 mod N."""


@dataclass(frozen=True)
class SL2Matrix:
    """``[[a, b], [c, d]]`` over Z_N with ``ad - bc = 1``."""

    a: Residue
    b: Residue
    c: Residue
    d: Residue

    def __post_init__(self):
        n = self.a.modulus
        if any(x.modulus != n for x in (self.b, self.c, self.d)):
            raise ModulusMismatchError("SL2 entries must share one modulus")
        det = self.a * self.d - self.b * self.c
        if det.value != 1:
            raise NotSpecialLinearError(
                f"[[{self.a.value},{self.b.value}],[{self.c.value},{self.d.value}]] "
                f"has determinant {det.value} mod {n}, expected 1")

    @classmethod
    def of(cls, n: int, a: int, b: int, c: int, d: int) -> SL2Matrix:
        return cls(Residue(a, n), Residue(b, n), Residue(c, n), Residue(d, n))

    @classmethod
    def identity(cls, n: int) -> SL2Matrix:
        return cls.of(n, 1, 0, 0, 1)

    @property
    def n(self) -> int:
        return self.a.modulus

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a.value, self.b.value, self.c.value, self.d.value)

    def rows(self) -> list[list[int]]:
        a, b, c, d = self.as_tuple()
        return [[a, b], [c, d]]

    def __mul__(self, other: SL2Matrix) -> SL2Matrix:
        return sl2_multiply(self, other)

    def inverse(self) -> SL2Matrix:
        return sl2_inverse(self)

    def __repr__(self) -> str:
        a, b, c, d = self.as_tuple()
        return f"SL2[[{a},{b}],[{c},{d}]] mod {self.n}"


@dataclass(frozen=True, order=True)
class ClassLabel:
    """Canonical representative of a class: ``(1, 0)`` or ``(k, 1)``."""

    representative: PhasePoint

    def __post_init__(self):
        i, j = self.representative.as_tuple()
        if not ((i, j) == (1, 0) or j == 1):
            raise ValueError(f"{self.representative} is not a canonical class representative")

    @classmethod
    def of(cls, n: int, i: int, j: int) -> ClassLabel:
        return cls(PhasePoint.of(n, i, j))

    def as_tuple(self) -> tuple[int, int]:
        return self.representative.as_tuple()

    def __repr__(self) -> str:
        return f"[{self.representative!r}]"


def act(pt: PhasePoint, m: SL2Matrix) -> PhasePoint:
    """Right action ``(i, j) -> (i a + j c, i b + j d)``."""
    if pt.n != m.n:
        raise ModulusMismatchError(f"point mod {pt.n} cannot be acted on by a matrix mod {m.n}")
    return PhasePoint(pt.i * m.a + pt.j * m.c, pt.i * m.b + pt.j * m.d)


def sl2_multiply(x: SL2Matrix, y: SL2Matrix) -> SL2Matrix:
    if x.n != y.n:
        raise ModulusMismatchError(f"cannot multiply SL2 matrices mod {x.n} and mod {y.n}")
    return SL2Matrix(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def sl2_inverse(x: SL2Matrix) -> SL2Matrix:
    return SL2Matrix(x.d, -x.b, -x.c, x.a)


def sl2_enumerate(n: int) -> list[SL2Matrix]:
    """Every element of SL(2, Z_N) for prime N, in lexicographic ``(a, b, c, d)`` order."""
    require_prime(n, "sl2_enumerate")
    out = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        if (a * d - b * c) % n == 1:
            out.append(SL2Matrix.of(n, a, b, c, d))
    return out


def points(n: int, include_zero: bool = False) -> Iterator[PhasePoint]:
    for i, j in itertools.product(range(n), repeat=2):
        if include_zero or (i, j) != (0, 0):
            yield PhasePoint.of(n, i, j)


def orbit(pt: PhasePoint, group: list[SL2Matrix] | None = None) -> set[PhasePoint]:
    group = sl2_enumerate(pt.n) if group is None else group
    return {act(pt, m) for m in group}


def stabilizer(pt: PhasePoint, group: list[SL2Matrix] | None = None) -> list[SL2Matrix]:
    group = sl2_enumerate(pt.n) if group is None else group
    return [m for m in group if act(pt, m) == pt]


def orbit_and_stabilizer(n: int) -> tuple[int, list[SL2Matrix]]:
    """Size of the orbit of ``(1, 0)`` and the stabilizer of ``(1, 0)``."""
    group = sl2_enumerate(n)
    base = PhasePoint.of(n, 1, 0)
    return len(orbit(base, group)), stabilizer(base, group)


def pair_determinant(p: PhasePoint, q: PhasePoint) -> Residue:
    """``det [[p.i, p.j], [q.i, q.j]]`` mod N; invariant under the SL(2) action."""
    if p.n != q.n:
        raise ModulusMismatchError(f"points mod {p.n} and mod {q.n}")
    return p.i * q.j - p.j * q.i


def class_of(pt: PhasePoint) -> ClassLabel:
    """The class of a nonzero point under scaling by Z_N^*."""
    require_prime(pt.n, "class_of")
    if pt.is_zero():
        raise ValueError("the origin (0,0) belongs to no class")
    n = pt.n
    if pt.j.is_zero():
        return ClassLabel.of(n, 1, 0)
    k = solve_linear(pt.j, pt.i)
    return ClassLabel.of(n, k.value, 1)


def class_labels(n: int) -> list[ClassLabel]:
    """The N+1 labels ``[(1,0)], [(0,1)], [(1,1)], ..., [(N-1,1)]``."""
    require_prime(n, "class_labels")
    return [ClassLabel.of(n, 1, 0)] + [ClassLabel.of(n, k, 1) for k in range(n)]


def class_partition(n: int) -> dict[ClassLabel, list[PhasePoint]]:
    """Map each label to its members, in label order and row-major member order."""
    parts: dict[ClassLabel, list[PhasePoint]] = {lab: [] for lab in class_labels(n)}
    for pt in points(n):
        parts[class_of(pt)].append(pt)
    return parts


def transport_matrix(p: PhasePoint, q: PhasePoint) -> SL2Matrix:
    """Matrix ``A`` sending ``(a,1) -> (a-b, 0)`` and ``(b,1) -> (0, 1)``.

    Solves for ``C = A^{-1}`` from ``(a~,0) C = (a,1)`` and ``(0,b~) C = (b,1)``
    with the factorisation ``a~ = a - b``, ``b~ = 1``, then inverts.
    """
    if p.n != q.n:
        raise ModulusMismatchError(f"points mod {p.n} and mod {q.n}")
    n = p.n
    require_prime(n, "transport_matrix")
    if p.j.value != 1 or q.j.value != 1:
        raise ValueError("transport_matrix expects representatives of the form (a,1), (b,1)")
    a, b = p.i, q.i
    if a == b:
        raise ValueError(f"points {p} and {q} are equal; no transport exists")
    a_t = a - b
    b_t = Residue(1, n)
    beta = solve_linear(a_t, Residue(1, n))
    alpha = solve_linear(a_t, a)
    gamma = solve_linear(b_t, b)
    delta = solve_linear(b_t, Residue(1, n))
    c = SL2Matrix(alpha, beta, gamma, delta)
    return sl2_inverse(c)


def shear_a1(b: Residue) -> SL2Matrix:
    """``[[1, 0], [-b, 1]]``: fixes ``(1,0)`` and sends ``(b,1)`` to ``(0,1)``."""
    n = b.modulus
    return SL2Matrix(Residue(1, n), Residue(0, n), -b, Residue(1, n))


def shear_a2(b: Residue) -> SL2Matrix:
    """``[[1, -1/b], [0, 1]]``: fixes ``(0,1)`` and sends ``(b,1)`` to ``(b,0)``.

    The minus sign is forced by ``b * x + 1 == 0`` in the second coordinate.
    """
    n = b.modulus
    return SL2Matrix(Residue(1, n), -inverse(b), Residue(0, n), Residue(1, n))
