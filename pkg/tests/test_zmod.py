import pytest
from hypothesis import given, strategies as st

from primemub.errors import ModulusMismatchError, NotInvertibleError
from primemub.zmod import Residue, add, inverse, is_prime, mul, solve_linear

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                67, 71, 73, 79, 83, 89, 97, 101]


@pytest.mark.parametrize("x, y, n, expected", [(3, 4, 5, 2), (0, 6, 7, 6), (1, 1, 2, 0)])
def test_add(x, y, n, expected):
    assert add(Residue(x, n), Residue(y, n)) == Residue(expected, n)


@pytest.mark.parametrize("x, y, n, expected", [(3, 4, 5, 2), (1, 6, 7, 6), (2, 2, 4, 0)])
def test_mul(x, y, n, expected):
    assert mul(Residue(x, n), Residue(y, n)) == Residue(expected, n)


def test_mixed_moduli_rejected():
    with pytest.raises(ModulusMismatchError):
        add(Residue(1, 5), Residue(1, 7))
    with pytest.raises(ModulusMismatchError):
        Residue(1, 5) * Residue(2, 3)


def test_value_is_reduced():
    assert Residue(-1, 5).value == 4
    assert Residue(12, 5) == Residue(2, 5)


def test_inverse_examples():
    assert inverse(Residue(3, 5)) == Residue(2, 5)
    for n in (2, 9, 31):
        assert inverse(Residue(1, n)) == Residue(1, n)
    with pytest.raises(NotInvertibleError):
        inverse(Residue(2, 4))
    with pytest.raises(NotInvertibleError):
        inverse(Residue(0, 7))


def test_solve_linear_examples():
    # brute-force oracle: scan k in Z_5
    assert [k for k in range(5) if (4 * k) % 5 == 2] == [3]
    assert solve_linear(Residue(4, 5), Residue(2, 5)) == Residue(3, 5)
    assert solve_linear(Residue(1, 11), Residue(7, 11)) == Residue(7, 11)
    with pytest.raises(NotInvertibleError):
        solve_linear(Residue(2, 6), Residue(1, 6))


@pytest.mark.parametrize("n", [p for p in SMALL_PRIMES if p <= 101])
def test_field_axiom_inverse(n):
    for v in range(1, n):
        x = Residue(v, n)
        assert (x * inverse(x)).value == 1


@pytest.mark.parametrize("n", [p for p in SMALL_PRIMES if p <= 31])
def test_solve_linear_unique_by_scan(n):
    for c in range(1, n):
        for r in range(n):
            scan = [k for k in range(n) if (c * k - r) % n == 0]
            assert len(scan) == 1
            assert solve_linear(Residue(c, n), Residue(r, n)).value == scan[0]


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(6)
    assert is_prime(97)
    with pytest.raises(ValueError):
        is_prime(1)


def test_is_prime_against_sieve():
    limit = 5000
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for p in range(2, limit + 1):
        if sieve[p]:
            for q in range(p * p, limit + 1, p):
                sieve[q] = False
    assert [n for n in range(2, limit + 1) if is_prime(n)] == [n for n in range(2, limit + 1) if sieve[n]]


@given(st.integers(2, 200), st.integers(), st.integers(), st.integers())
def test_ring_laws(n, a, b, c):
    x, y, z = Residue(a, n), Residue(b, n), Residue(c, n)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - y == x + (-y)
