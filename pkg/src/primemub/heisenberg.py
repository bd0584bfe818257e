"""The finite Heisenberg (Pauli) group in dimension N.

Elements are stored symbolically as exponent triples ``(l, i, j)`` meaning
``omega^l Q^i P^j`` with the canonical ordering Q before P.  Matrix
realizations use ``omega = exp(2 pi i / N)``, ``Q = diag(omega^k)`` and the
shift ``P |k> = |k-1 mod N>``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import ModulusMismatchError
from .zmod import Residue


def root_of_unity(n: int, k: int = 1, order: int | None = None) -> complex:
    """``exp(2 pi i k / order)`` with the exponent reduced first (``order`` defaults to n)."""
    m = n if order is None else order
    return complex(np.exp(2j * np.pi * (k % m) / m))


def _roots(n: int, exps) -> np.ndarray:
    return np.exp(2j * np.pi * (np.asarray(exps) % n) / n)


@dataclass(frozen=True)
class HeisenbergElement:
    """``omega^l Q^i P^j`` with all three exponents in Z_N."""

    phase_exp: Residue
    q_exp: Residue
    p_exp: Residue

    def __post_init__(self):
        n = self.phase_exp.modulus
        if self.q_exp.modulus != n or self.p_exp.modulus != n:
            raise ModulusMismatchError("exponents of a Heisenberg element must share one modulus")

    @classmethod
    def of(cls, n: int, l: int, i: int, j: int) -> HeisenbergElement:
        return cls(Residue(l, n), Residue(i, n), Residue(j, n))

    @classmethod
    def identity(cls, n: int) -> HeisenbergElement:
        return cls.of(n, 0, 0, 0)

    @property
    def n(self) -> int:
        return self.phase_exp.modulus

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.phase_exp.value, self.q_exp.value, self.p_exp.value)

    def __mul__(self, other: HeisenbergElement) -> HeisenbergElement:
        return multiply(self, other)

    def __repr__(self) -> str:
        l, i, j = self.as_tuple()
        return f"HeisenbergElement(l={l}, i={i}, j={j}; N={self.n})"


def multiply(x: HeisenbergElement, y: HeisenbergElement) -> HeisenbergElement:
    """Normal-ordered product.

    Moving ``P^{j1}`` to the right of ``Q^{i2}`` picks up ``omega^{j1 i2}``
    because ``P Q = omega Q P``.
    """
    if x.n != y.n:
        raise ModulusMismatchError(f"cannot multiply elements of Pi_{x.n} and Pi_{y.n}")
    return HeisenbergElement(
        x.phase_exp + y.phase_exp + x.p_exp * y.q_exp,
        x.q_exp + y.q_exp,
        x.p_exp + y.p_exp,
    )


def inverse(x: HeisenbergElement) -> HeisenbergElement:
    # (l,i,j)(l',-i,-j) = (l + l' - j*i, 0, 0)
    return HeisenbergElement(-x.phase_exp + x.p_exp * x.q_exp, -x.q_exp, -x.p_exp)


def is_central(x: HeisenbergElement) -> bool:
    return x.q_exp.is_zero() and x.p_exp.is_zero()


def coset_of(x: HeisenbergElement):
    """Project onto the phase space point ``(i, j)``, forgetting the phase."""
    from .phasespace import PhasePoint

    return PhasePoint(x.q_exp, x.p_exp)


def elements(n: int) -> Iterator[HeisenbergElement]:
    """All N^3 group elements, lexicographic in ``(l, i, j)``."""
    for l, i, j in itertools.product(range(n), repeat=3):
        yield HeisenbergElement.of(n, l, i, j)


def q_matrix(n: int) -> np.ndarray:
    """Clock matrix ``diag(1, omega, ..., omega^{N-1})``."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    return np.diag(_roots(n, np.arange(n)))


def p_matrix(n: int) -> np.ndarray:
    """Shift matrix with ``P |k> = |k-1 mod N>``; ones on the superdiagonal and at (N-1, 0)."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    p = np.zeros((n, n), dtype=complex)
    k = np.arange(n)
    p[(k - 1) % n, k] = 1.0
    return p


def weyl_matrix(n: int, i: int, j: int, phase_exp: int = 0) -> np.ndarray:
    """Dense ``omega^l Q^i P^j``.

    Built entrywise so that no error accumulates from repeated products:
    column ``k`` has its single nonzero in row ``k - j`` with value
    ``omega^{l + i (k - j)}``.
    """
    k = np.arange(n)
    rows = (k - j) % n
    m = np.zeros((n, n), dtype=complex)
    m[rows, k] = _roots(n, phase_exp + i * rows)
    return m


def realize(x: HeisenbergElement) -> np.ndarray:
    l, i, j = x.as_tuple()
    return weyl_matrix(x.n, i, j, l)


def schwinger_inner(a: Residue, b: Residue, c: Residue, d: Residue) -> complex:
    """``Tr((Q^a P^b)^dagger Q^c P^d)``, which equals ``N delta_ac delta_bd``."""
    n = a.modulus
    if any(r.modulus != n for r in (b, c, d)):
        raise ModulusMismatchError("schwinger_inner needs four residues of one modulus")
    left = weyl_matrix(n, a.value, b.value)
    right = weyl_matrix(n, c.value, d.value)
    return complex(np.trace(left.conj().T @ right))
