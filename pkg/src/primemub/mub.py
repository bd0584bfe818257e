"""Maximal sets of N+1 mutually unbiased bases for prime N.

Two constructions are provided:

* :func:`build_formula_bases` evaluates the quadratic-phase formulas and keeps
  every phase as an exact exponent mod 2N (:class:`PhaseBasis`).
* :func:`build_operator_bases` applies the unitary chain ``D_N^b S_N`` to the
  canonical basis and works in floating point (:class:`ComplexBasis`).

Unbiasedness is checked numerically for both and exactly for phase bases.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import CollectionFullError, DimensionMismatchError, MubError
from .heisenberg import weyl_matrix
from .phasespace import ClassLabel, PhasePoint, class_labels
from .unitary import d_power, sylvester
from .zmod import require_prime

ORTHONORMAL_TOL = 1e-10
EIGEN_TOL = 1e-10
EQUIVALENCE_TOL = 1e-8


_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


class NotOrthonormalError(MubError):
    pass


# --------------------------------------------------------------------------
# exact phase representation


@dataclass(frozen=True)
class PhaseVector:
    """Vector whose entries are 0 or ``omega_{2N}^e`` times a normalization.

    ``exps[k]`` is ``None`` for a zero entry, otherwise an exponent mod 2N.
    A vector is either a standard basis vector (one nonzero, normalization 1)
    or dense (no zeros, normalization ``1/sqrt(N)``).
    """

    dimension: int
    exps: tuple[int | None, ...]

    def __post_init__(self):
        m = 2 * self.dimension
        if len(self.exps) != self.dimension:
            raise ValueError(f"expected {self.dimension} entries, got {len(self.exps)}")
        exps = tuple(None if e is None else int(e) % m for e in self.exps)
        object.__setattr__(self, "exps", exps)
        nonzero = sum(e is not None for e in exps)
        if nonzero not in (1, self.dimension):
            raise ValueError("phase vector must be a standard basis vector or fully dense")

    @property
    def modulus(self) -> int:
        return 2 * self.dimension

    @property
    def is_dense(self) -> bool:
        return all(e is not None for e in self.exps) and self.dimension > 1

    @property
    def normalization(self) -> str:
        return "1/sqrt(N)" if self.is_dense else "1"

    @classmethod
    def standard(cls, n: int, k: int) -> PhaseVector:
        return cls(n, tuple(0 if j == k else None for j in range(n)))

    def to_array(self) -> np.ndarray:
        n = self.dimension
        out = np.zeros(n, dtype=complex)
        scale = 1 / np.sqrt(n) if self.is_dense else 1.0
        for j, e in enumerate(self.exps):
            if e is None:
                continue
            quarter, rem = divmod(4 * e, self.modulus)
            # quarter turns are written exactly so that 1, i, -1, -i carry no rounding
            phase = _QUARTER_TURNS[quarter] if rem == 0 else np.exp(1j * np.pi * e / n)
            out[j] = scale * phase
        return out


@dataclass(frozen=True)
class PhaseBasis:
    dimension: int
    vectors: tuple[PhaseVector, ...]

    def __post_init__(self):
        if len(self.vectors) != self.dimension:
            raise ValueError(f"a basis of C^{self.dimension} needs {self.dimension} vectors")
        if any(v.dimension != self.dimension for v in self.vectors):
            raise DimensionMismatchError("all vectors must share the basis dimension")

    @property
    def is_dense(self) -> bool:
        return all(v.is_dense for v in self.vectors)

    def exponent_array(self) -> np.ndarray:
        """``(N, N)`` int array, row k = exponents of vector k; dense bases only."""
        if not self.is_dense:
            raise ValueError("exponent_array is defined for dense phase bases only")
        return np.array([v.exps for v in self.vectors], dtype=np.int64)

    def to_complex(self, check: bool = True) -> ComplexBasis:
        return ComplexBasis(np.column_stack([v.to_array() for v in self.vectors]), check=check)


def _signed_counts(diff: np.ndarray, n: int) -> np.ndarray:
    """Histogram of ``omega_{2N}^g`` rewritten as ``+-omega_N^e`` (odd N).

    ``diff`` has shape ``(..., N)`` with entries in Z_{2N}.  Odd exponents use
    ``omega_{2N}^g = -omega_N^{(g+N)/2}``.  Returns signed counts ``(..., N)``.
    """
    odd = diff % 2
    reduced = ((diff + odd * n) // 2) % n
    sign = 1 - 2 * odd
    onehot = (reduced[..., None] == np.arange(n)) * sign[..., None]
    return onehot.sum(axis=-2)


def _square_magnitude_equals(counts: np.ndarray, target: int) -> np.ndarray:
    """Exact test ``|sum_e c(e) omega_N^e|^2 == target`` for prime N.

    The square magnitude is ``sum_d h(d) omega^d`` with ``h`` the cyclic
    autocorrelation of ``c``.  Over Q the powers of a primitive N-th root obey
    exactly one relation (they sum to zero), so the value is the rational
    ``target`` iff ``h`` is constant off zero and ``h(0) - h(d) == target``.
    """
    n = counts.shape[-1]
    idx = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    h = np.einsum("...e,...ed->...d", counts, counts[..., idx])
    off = h[..., 1:]
    flat = np.all(off == off[..., :1], axis=-1)
    return flat & (h[..., 0] - h[..., 1] == target)


def _gaussian_square_magnitude(diff: np.ndarray) -> np.ndarray:
    """``|sum i^g|^2`` as exact integers (N = 2, exponents mod 4)."""
    re = np.sum(diff == 0, axis=-1) - np.sum(diff == 2, axis=-1)
    im = np.sum(diff == 1, axis=-1) - np.sum(diff == 3, axis=-1)
    return re * re + im * im


def _dense_overlap_test(ex: np.ndarray, ey: np.ndarray, n: int, target: int) -> np.ndarray:
    """For dense exponent rows, test ``|sum_j omega_{2N}^{ey_j - ex_j}|^2 == target``.

    ``ex`` and ``ey`` broadcast against each other with the component axis last.
    """
    diff = (ey - ex) % (2 * n)
    if n == 2:
        return _gaussian_square_magnitude(diff) == target
    return _square_magnitude_equals(_signed_counts(diff, n), target)


def _check_exact_pair(x: PhaseVector, y: PhaseVector) -> None:
    if x.dimension != y.dimension:
        raise DimensionMismatchError(f"dimensions {x.dimension} and {y.dimension}")
    require_prime(x.dimension, "exact unbiasedness")


def _support(v: PhaseVector) -> int:
    return next(k for k, e in enumerate(v.exps) if e is not None)


def exact_unbiased(x: PhaseVector, y: PhaseVector) -> bool:
    """Exact integer test of ``|<x|y>|^2 == 1/N``.

    Dense/dense pairs reduce to ``|sum_j omega^{g_j}|^2 == N``; a standard
    vector against a dense one always overlaps in exactly ``1/sqrt(N)``; two
    standard vectors overlap in 0 or 1.
    """
    _check_exact_pair(x, y)
    n = x.dimension
    if x.is_dense and y.is_dense:
        ex = np.array(x.exps, dtype=np.int64)
        ey = np.array(y.exps, dtype=np.int64)
        return bool(_dense_overlap_test(ex, ey, n, n))
    return x.is_dense != y.is_dense


def exact_orthogonal(x: PhaseVector, y: PhaseVector) -> bool:
    _check_exact_pair(x, y)
    n = x.dimension
    if x.is_dense and y.is_dense:
        ex = np.array(x.exps, dtype=np.int64)
        ey = np.array(y.exps, dtype=np.int64)
        return bool(_dense_overlap_test(ex, ey, n, 0))
    if x.is_dense or y.is_dense:
        return False
    return _support(x) != _support(y)


def exact_unbiased_bases(x: PhaseBasis, y: PhaseBasis) -> np.ndarray:
    """``(N, N)`` boolean matrix: entry ``(k, m)`` is ``exact_unbiased(x_k, y_m)``."""
    if x.dimension != y.dimension:
        raise DimensionMismatchError(f"dimensions {x.dimension} and {y.dimension}")
    n = x.dimension
    require_prime(n, "exact unbiasedness")
    if x.is_dense and y.is_dense:
        ex = x.exponent_array()[:, None, :]
        ey = y.exponent_array()[None, :, :]
        return _dense_overlap_test(ex, ey, n, n)
    return np.array([[exact_unbiased(u, v) for v in y.vectors] for u in x.vectors])


def exact_orthonormal(basis: PhaseBasis) -> bool:
    """Exact check that distinct vectors are orthogonal (norms are 1 by construction)."""
    n = basis.dimension
    require_prime(n, "exact orthonormality")
    if basis.is_dense:
        e = basis.exponent_array()
        ortho = _dense_overlap_test(e[:, None, :], e[None, :, :], n, 0)
        return bool(np.all(ortho[~np.eye(n, dtype=bool)]))
    vs = basis.vectors
    return all(exact_orthogonal(vs[k], vs[m]) for k in range(n) for m in range(k + 1, n))


# --------------------------------------------------------------------------
# floating point bases


class ComplexBasis:
    """N orthonormal column vectors in C^N."""

    def __init__(self, columns: np.ndarray, check: bool = True):
        columns = np.array(columns, dtype=complex)
        if columns.ndim != 2 or columns.shape[0] != columns.shape[1]:
            raise ValueError(f"basis must be a square matrix of columns, got shape {columns.shape}")
        columns.setflags(write=False)
        self.columns = columns
        if check and not self.is_orthonormal():
            raise NotOrthonormalError(
                f"Gram matrix deviates from identity by {self.gram_deviation():.3e}")

    @property
    def dimension(self) -> int:
        return self.columns.shape[0]

    def vector(self, k: int) -> np.ndarray:
        return self.columns[:, k]

    def gram_deviation(self) -> float:
        g = self.columns.conj().T @ self.columns
        return float(np.max(np.abs(g - np.eye(self.dimension))))

    def is_orthonormal(self, tol: float = ORTHONORMAL_TOL) -> bool:
        return self.gram_deviation() < tol

    def __repr__(self) -> str:
        return f"ComplexBasis(N={self.dimension})"


AnyBasis = Union[PhaseBasis, ComplexBasis]


def as_complex(basis: AnyBasis) -> ComplexBasis:
    return basis.to_complex() if isinstance(basis, PhaseBasis) else basis


@dataclass
class MubCollection:
    """Up to N+1 bases of C^N with their class labels.

    No more than N+1 pairwise unbiased bases exist in dimension N, so adding
    an (N+2)-th basis is refused outright.
    """

    dimension: int
    bases: list[AnyBasis] = field(default_factory=list)
    labels: list[ClassLabel | None] = field(default_factory=list)
    method: str = ""
    verified: bool = field(default=False, init=False)

    def __post_init__(self):
        if len(self.bases) > self.capacity:
            raise CollectionFullError(
                f"{len(self.bases)} bases exceed the maximum {self.capacity} for N={self.dimension}")
        if len(self.labels) < len(self.bases):
            self.labels = list(self.labels) + [None] * (len(self.bases) - len(self.labels))

    @property
    def capacity(self) -> int:
        return self.dimension + 1

    def __len__(self) -> int:
        return len(self.bases)

    def add(self, basis: AnyBasis, label: ClassLabel | None = None) -> None:
        if basis.dimension != self.dimension:
            raise DimensionMismatchError(
                f"basis of dimension {basis.dimension} added to collection of dimension {self.dimension}")
        if len(self.bases) >= self.capacity:
            raise CollectionFullError(
                f"dimension {self.dimension} admits at most {self.capacity} mutually unbiased bases")
        self.bases.append(basis)
        self.labels.append(label)
        self.verified = False

    def complex_bases(self) -> list[ComplexBasis]:
        return [as_complex(b) for b in self.bases]

    def verify(self, tol: float = 1e-10) -> np.ndarray:
        """Compute pairwise deviations and record whether all are below ``tol``."""
        dev = unbiasedness_matrix(self.complex_bases())
        off = dev[~np.eye(len(self.bases), dtype=bool)]
        self.verified = bool(np.all(off < tol))
        return dev

    @property
    def is_maximal(self) -> bool:
        return self.verified and len(self.bases) == self.capacity


# --------------------------------------------------------------------------
# constructions


def _eq14_bases() -> list[PhaseBasis]:
    # exponents mod 4: omega_4 = i
    canonical = PhaseBasis(2, (PhaseVector.standard(2, 0), PhaseVector.standard(2, 1)))
    plus_minus = PhaseBasis(2, (PhaseVector(2, (0, 0)), PhaseVector(2, (0, 2))))
    plus_minus_i = PhaseBasis(2, (PhaseVector(2, (0, 1)), PhaseVector(2, (0, 3))))
    return [canonical, plus_minus, plus_minus_i]


def _formula_basis(n: int, r: int) -> PhaseBasis:
    j = np.arange(n)
    vectors = []
    for k in range(n):
        exps = (2 * (r * j * j + j * k)) % (2 * n)
        vectors.append(PhaseVector(n, tuple(int(e) for e in exps)))
    return PhaseBasis(n, tuple(vectors))


def label_basis(basis: AnyBasis) -> ClassLabel | None:
    """The class whose operators are diagonal in ``basis``, if any."""
    cb = as_complex(basis)
    for lab in class_labels(cb.dimension):
        if eigenbasis_check(cb, lab.representative):
            return lab
    return None


def build_formula_bases(n: int) -> MubCollection:
    """Formula bases with exact phases: canonical, quadratic phases r = 1..N-1, Fourier.

    For N = 2 the three eigenbases of the Pauli matrices are returned instead.
    Labels are measured with :func:`eigenbasis_check`.
    """
    require_prime(n, "build_formula_bases")
    if n == 2:
        bases = _eq14_bases()
    else:
        canonical = PhaseBasis(n, tuple(PhaseVector.standard(n, k) for k in range(n)))
        bases = [canonical] + [_formula_basis(n, r) for r in range(1, n)] + [_formula_basis(n, 0)]
    coll = MubCollection(n, method="formula")
    for b in bases:
        coll.add(b, label_basis(b))
    return coll


def formula_class(n: int, r: int) -> ClassLabel:
    """Label of formula basis ``r`` (odd N): ``(1,0)`` for r=0, ``(0,1)`` for r=N, else ``(-2r, 1)``."""
    if r == 0:
        return ClassLabel.of(n, 1, 0)
    if r == n:
        return ClassLabel.of(n, 0, 1)
    return ClassLabel.of(n, -2 * r, 1)


def operator_chain(n: int) -> list[np.ndarray]:
    """The unitaries ``I`` and ``D_N^b S_N`` for ``b = 0..N-1``."""
    s = sylvester(n)
    return [np.eye(n, dtype=complex)] + [d_power(n, b) @ s for b in range(n)]


def build_operator_bases(n: int) -> MubCollection:
    """Bases obtained from the canonical one by the unitaries ``D_N^b S_N``.

    Column set ``D_N^b S_N`` diagonalizes ``Q^{-b} P``, so it carries the
    label ``(-b mod N, 1)``.
    """
    require_prime(n, "build_operator_bases")
    coll = MubCollection(n, method="operator")
    coll.add(ComplexBasis(np.eye(n, dtype=complex)), ClassLabel.of(n, 1, 0))
    for b, u in enumerate(operator_chain(n)[1:]):
        coll.add(ComplexBasis(u), ClassLabel.of(n, -b, 1))
    return coll


# --------------------------------------------------------------------------
# verification


def eigenbasis_check(basis: AnyBasis, pt: PhasePoint, tol: float = EIGEN_TOL) -> bool:
    """True iff every vector of ``basis`` is an eigenvector of ``Q^i P^j``."""
    if pt.is_zero():
        raise ValueError("(0,0) labels the identity coset; every basis diagonalizes it")
    cb = as_complex(basis)
    m = weyl_matrix(cb.dimension, pt.i.value, pt.j.value)
    v = cb.columns
    mv = m @ v
    lam = np.sum(v.conj() * mv, axis=0)
    residual = np.linalg.norm(mv - v * lam, axis=0)
    return bool(np.all(residual < tol))


def pair_deviation(x: AnyBasis, y: AnyBasis) -> float:
    """``max | |<u|v>| - 1/sqrt(N) |`` over vectors u of x, v of y."""
    cx, cy = as_complex(x), as_complex(y)
    if cx.dimension != cy.dimension:
        raise DimensionMismatchError(f"dimensions {cx.dimension} and {cy.dimension}")
    overlaps = np.abs(cx.columns.conj().T @ cy.columns)
    return float(np.max(np.abs(overlaps - 1 / np.sqrt(cx.dimension))))


def vector_deviations(x: AnyBasis, y: AnyBasis) -> np.ndarray:
    cx, cy = as_complex(x), as_complex(y)
    overlaps = np.abs(cx.columns.conj().T @ cy.columns)
    return np.abs(overlaps - 1 / np.sqrt(cx.dimension))


def unbiasedness_matrix(bases: Sequence[AnyBasis]) -> np.ndarray:
    """Symmetric matrix of :func:`pair_deviation`; the diagonal is zero."""
    cbs = [as_complex(b) for b in bases]
    if len({b.dimension for b in cbs}) > 1:
        raise DimensionMismatchError("bases have different dimensions")
    for idx, b in enumerate(cbs):
        if not b.is_orthonormal():
            raise NotOrthonormalError(f"basis {idx} is not orthonormal")
    k = len(cbs)
    dev = np.zeros((k, k))
    for r in range(k):
        for s in range(r + 1, k):
            dev[r, s] = dev[s, r] = pair_deviation(cbs[r], cbs[s])
    return dev


def gauss_sum(a: int, b: int, p: int) -> complex:
    """``sum_k exp(2 pi i (a k^2 + b k) / p)``; has modulus ``sqrt(p)`` for odd prime p."""
    require_prime(p, "gauss_sum")
    if p == 2:
        raise ValueError("gauss_sum is defined for odd primes")
    if a % p == 0:
        raise ValueError(f"a = {a} is a multiple of p = {p}; the sum degenerates")
    k = np.arange(p)
    return complex(np.sum(np.exp(2j * np.pi * ((a * k * k + b * k) % p) / p)))


def basis_equivalent(x: AnyBasis, y: AnyBasis, tol: float = EQUIVALENCE_TOL) -> bool:
    """True iff ``y`` is a reordering of ``x`` with each vector rescaled by a phase."""
    return basis_matching(x, y, tol) is not None


def basis_matching(x: AnyBasis, y: AnyBasis, tol: float = EQUIVALENCE_TOL) -> list[int] | None:
    """Permutation ``pi`` with ``y[pi[k]] ~ x[k]`` up to phase, or None."""
    cx, cy = as_complex(x), as_complex(y)
    if cx.dimension != cy.dimension:
        return None
    inner = cx.columns.conj().T @ cy.columns
    used: set[int] = set()
    perm = []
    for k in range(cx.dimension):
        m = int(np.argmax(np.abs(inner[k])))
        if m in used or abs(abs(inner[k, m]) - 1) > tol:
            return None
        phase = inner[k, m]
        if np.linalg.norm(cy.columns[:, m] - phase * cx.columns[:, k]) > tol:
            return None
        used.add(m)
        perm.append(m)
    return perm
