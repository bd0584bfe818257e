"""Unitaries that normalize the Heisenberg group, and the map to SL(2, Z_N).

A unitary ``X`` acts on operators by ``A -> X^{-1} A X``.  When it permutes
the cosets ``Q^i P^j`` it determines a matrix ``[[a, b], [c, d]]`` via
``X^{-1} Q X ~ Q^a P^b`` and ``X^{-1} P X ~ Q^c P^d``; :func:`phi_of`
computes it and :func:`realize_sl2` goes the other way.
"""
from __future__ import annotations

import functools
from collections import deque

import numpy as np

from .errors import DimensionMismatchError, NotMonomialError, NotUnitaryError, MubError
from .heisenberg import p_matrix, q_matrix, weyl_matrix
from .phasespace import NotSpecialLinearError, PhasePoint, SL2Matrix, act, points
from .zmod import require_prime

UNITARY_TOL = 1e-10
IDENTIFY_TOL = 1e-8


def is_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))) < tol


def sylvester(n: int) -> np.ndarray:
    """Discrete Fourier matrix with entries ``omega^{jk} / sqrt(N)``."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    k = np.arange(n)
    return np.exp(2j * np.pi * (np.outer(k, k) % n) / n) / np.sqrt(n)


def epsilon(n: int) -> complex:
    """1 for odd N, ``exp(pi i / N)`` for even N."""
    return 1.0 + 0j if n % 2 else complex(np.exp(1j * np.pi / n))


def d_matrix(n: int) -> np.ndarray:
    """Diagonal ``d_j = epsilon^{-j} omega^{j(j-1)/2}``.

    Conjugation by it fixes Q and sends P to ``epsilon^{-1} Q P``.  Phases are
    evaluated as exact exponents mod 2N.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    j = np.arange(n)
    exps = j * (j - 1) - (0 if n % 2 else j)
    return np.diag(np.exp(1j * np.pi * (exps % (2 * n)) / n))


def conjugate(x: np.ndarray, u: np.ndarray) -> np.ndarray:
    """``u^{-1} x u`` for a unitary ``u``."""
    x, u = np.asarray(x), np.asarray(u)
    if x.shape != u.shape:
        raise DimensionMismatchError(f"shapes {x.shape} and {u.shape} differ")
    if not is_unitary(u):
        raise NotUnitaryError("conjugating matrix is not unitary within tolerance")
    return u.conj().T @ x @ u


def coset_identify(m: np.ndarray, tol: float = IDENTIFY_TOL) -> tuple[PhasePoint, complex]:
    """Write ``m`` as ``mu Q^a P^b`` and return ``((a, b), mu)``.

    Row ``r`` of ``Q^a P^b`` has its only nonzero in column ``r + b``, with
    value ``omega^{a r}``; ``b`` is read off row 0 and ``a`` from the ratio of
    the first two nonzero entries.  The reconstruction is then compared with
    ``m`` entrywise.
    """
    m = np.asarray(m)
    n = m.shape[0]
    b = int(np.argmax(np.abs(m[0])))
    mu = complex(m[0, b])
    if abs(abs(mu) - 1.0) > tol:
        raise NotMonomialError(f"leading entry has modulus {abs(mu):.3e}, expected 1")
    ratio = m[1, (1 + b) % n] / mu
    a = int(np.rint(np.angle(ratio) * n / (2 * np.pi))) % n
    candidate = mu * weyl_matrix(n, a, b)
    err = float(np.max(np.abs(candidate - m)))
    if err > tol:
        raise NotMonomialError(f"matrix differs from mu Q^{a} P^{b} by {err:.3e}")
    return PhasePoint.of(n, a, b), mu


class PhiError(MubError):
    """The unitary does not induce an SL(2, Z_N) transformation of cosets."""


def phi_of(u: np.ndarray) -> SL2Matrix:
    """The SL(2, Z_N) matrix induced by conjugation with ``u``."""
    u = np.asarray(u)
    n = u.shape[0]
    q_img, _ = coset_identify(conjugate(q_matrix(n), u))
    p_img, _ = coset_identify(conjugate(p_matrix(n), u))
    try:
        return SL2Matrix(q_img.i, q_img.j, p_img.i, p_img.j)
    except NotSpecialLinearError as exc:
        raise PhiError(f"induced coset map is not in SL(2, Z_{n}): {exc}") from exc


@functools.lru_cache(maxsize=None)
def _generator_images(n: int) -> tuple[tuple[int, int, int, int], tuple[int, int, int, int]]:
    return phi_of(sylvester(n)).as_tuple(), phi_of(d_matrix(n)).as_tuple()


def _mul(x: tuple, y: tuple, n: int) -> tuple[int, int, int, int]:
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % n, (a * f + b * h) % n, (c * e + d * g) % n, (c * f + d * h) % n)


@functools.lru_cache(maxsize=16)
def _word_tree(n: int) -> dict[tuple, tuple[tuple, int] | None]:
    """Breadth-first spanning tree of SL(2, Z_N) over the generators ``(S, D)``.

    Maps each reached element to ``(parent, generator index)``, the root
    (identity) to ``None``.
    """
    gens = _generator_images(n)
    root = (1, 0, 0, 1)
    tree: dict[tuple, tuple[tuple, int] | None] = {root: None}
    queue = deque([root])
    while queue:
        cur = queue.popleft()
        for idx, g in enumerate(gens):
            nxt = _mul(cur, g, n)
            if nxt not in tree:
                tree[nxt] = (cur, idx)
                queue.append(nxt)
    return tree


def generator_word(m: SL2Matrix) -> list[int]:
    """Shortest word (0 = S, 1 = D) whose product of images equals ``m``."""
    n = m.n
    require_prime(n, "generator_word")
    tree = _word_tree(n)
    key = m.as_tuple()
    if key not in tree:
        raise PhiError(f"{m!r} is not generated by the images of S_N and D_N")
    word = []
    node = tree[key]
    while node is not None:
        parent, idx = node
        word.append(idx)
        node = tree[parent]
    return word[::-1]


def word_unitary(n: int, word: list[int]) -> np.ndarray:
    gens = (sylvester(n), d_matrix(n))
    x = np.eye(n, dtype=complex)
    for idx in word:
        x = x @ gens[idx]
    return x


def realize_sl2(m: SL2Matrix) -> np.ndarray:
    """A unitary ``X`` with ``phi_of(X) == m``, as a product of S_N and D_N."""
    return word_unitary(m.n, generator_word(m))


def generated_order(n: int) -> int:
    """Number of SL(2, Z_N) elements reachable from the two generator images."""
    require_prime(n, "generated_order")
    return len(_word_tree(n))


def d_power(n: int, b: int) -> np.ndarray:
    """``D_N^b`` from exact exponents; induces ``[[1, 0], [b, 1]]``."""
    j = np.arange(n)
    exps = b * (j * (j - 1) - (0 if n % 2 else j))
    return np.diag(np.exp(1j * np.pi * (exps % (2 * n)) / n))


def random_word(rng, max_len: int = 8) -> list[int]:
    return [rng.randrange(2) for _ in range(rng.randint(1, max_len))]


def check_homomorphism(n: int, samples: int, rng) -> int:
    """Check ``phi_of(XY) == phi_of(X) phi_of(Y)`` on random generator words.

    Returns the number of verified identities; raises ``PhiError`` on the first failure.
    """
    for _ in range(samples):
        x = word_unitary(n, random_word(rng))
        y = word_unitary(n, random_word(rng))
        lhs, rhs = phi_of(x @ y), phi_of(x) * phi_of(y)
        if lhs != rhs:
            raise PhiError(f"phi(XY) = {lhs!r} but phi(X) phi(Y) = {rhs!r}")
    return samples


def check_action(n: int, samples: int, rng) -> int:
    """Check that conjugation moves every coset by the right action of ``phi_of``.

    Returns the number of verified ``(unitary, point)`` identities.
    """
    count = 0
    for _ in range(samples):
        x = word_unitary(n, random_word(rng))
        m = phi_of(x)
        for pt in points(n, include_zero=True):
            image, _ = coset_identify(conjugate(weyl_matrix(n, pt.i.value, pt.j.value), x))
            if image != act(pt, m):
                raise PhiError(f"{pt} maps to {image} under conjugation but to {act(pt, m)} under phi")
            count += 1
    return count
