import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from legdet.arith import (
    TwoSquares,
    crt_reconstruct,
    euler_phi,
    factorize,
    hadamard_bound,
    is_prime,
    is_sum_of_two_squares,
    jacobi,
    jacobsthal_sum,
    legendre_euler,
    primes_between,
    sum_two_squares,
    symbol_table,
    wilson_involution,
)

from oracles import det_fraction, is_prime_trial, jacobi_by_factoring

odd_moduli = st.integers(min_value=0, max_value=5000).map(lambda k: 2 * k + 1)


def test_jacobi_examples():
    assert jacobi(0, 5) == 0
    assert jacobi(2, 7) == 1 and jacobi(3, 7) == -1
    assert jacobi(2, 15) == 1
    assert jacobi(5, 1) == 1


@pytest.mark.parametrize("n", [0, -3, 4, 10])
def test_jacobi_rejects_bad_modulus(n):
    with pytest.raises(ValueError):
        jacobi(1, n)


def test_jacobi_matches_euler_for_primes_below_1000():
    for p in primes_between(3, 997):
        for a in range(p):
            assert jacobi(a, p) == legendre_euler(a, p)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), odd_moduli)
def test_jacobi_multiplicative(a, b, n):
    assert jacobi(a, n) * jacobi(b, n) == jacobi(a * b, n)


@given(st.integers(-10**9, 10**9), odd_moduli)
def test_jacobi_periodic_and_matches_factored(a, n):
    assert jacobi(a, n) == jacobi(a + n, n) == jacobi_by_factoring(a, n)


def test_symbol_table_read_only():
    t = symbol_table(7)
    assert list(t) == [0, 1, 1, -1, 1, -1, -1]
    with pytest.raises(ValueError):
        t[0] = 5


def test_is_prime_examples_and_trial_division():
    assert is_prime(2) and not is_prime(91) and is_prime(1999) and not is_prime(1)
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if is_prime_trial(n)]
    # large known primes / Carmichael numbers
    assert is_prime(2**61 - 1) and not is_prime(561) and not is_prime(3215031751)


def test_crt_examples():
    assert crt_reconstruct([1, 2], [3, 5]) == 7
    assert crt_reconstruct([0], [7]) == 0
    assert crt_reconstruct([2, 3], [3, 5]) == -7


def test_crt_errors():
    with pytest.raises(ValueError):
        crt_reconstruct([1, 2], [3, 6])
    with pytest.raises(ValueError):
        crt_reconstruct([1], [3, 5])


@given(st.integers(-10**30, 10**30))
def test_crt_round_trip(v):
    mods = [1_000_003, 1_000_033, 1_000_037, 1_000_039, 999_983, 999_979]
    m = math.prod(mods)
    v = v % m - m // 2 + (1 if m % 2 == 0 else 0)
    assert crt_reconstruct([v % q for q in mods], mods) == v


def test_hadamard_examples():
    assert hadamard_bound([[0]]) == 0
    assert hadamard_bound([[1, 1], [1, -1]]) == 2
    assert hadamard_bound([[3, 4], [0, 5]]) == 25


@settings(max_examples=60)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_hadamard_bounds_determinant(n, rnd):
    m = [[rnd.randint(-50, 50) for _ in range(n)] for _ in range(n)]
    assert abs(det_fraction(m)) <= hadamard_bound(m)


def test_two_squares_examples():
    assert sum_two_squares(5) == TwoSquares(1, 2, 5)
    assert sum_two_squares(21) is None
    assert sum_two_squares(325) == TwoSquares(1, 18, 325)
    with pytest.raises(ValueError):
        TwoSquares(2, 1, 5)


def test_two_squares_criterion_matches_search_up_to_10000():
    reps = set()
    for a in range(101):
        for b in range(a, 101):
            reps.add(a * a + b * b)
    for n in range(1, 10_001):
        found = sum_two_squares(n)
        assert (found is not None) == (n in reps) == is_sum_of_two_squares(n)
        if found:
            assert found.a ** 2 + found.b ** 2 == n


def test_jacobsthal_examples():
    assert jacobsthal_sum(5) == -2
    assert jacobsthal_sum(21) == 0
    assert jacobsthal_sum(9) == 6
    with pytest.raises(ValueError):
        jacobsthal_sum(8)


def test_jacobsthal_matches_direct_sum():
    for n in range(3, 400, 2):
        assert jacobsthal_sum(n) == sum(jacobi(x * (x * x + 1), n) for x in range(n))


def test_jacobsthal_vanishing_criterion():
    for n in range(5, 2001, 4):
        assert (jacobsthal_sum(n) == 0) == (not is_sum_of_two_squares(n))


def test_wilson_involution_examples():
    r = wilson_involution(13)
    assert r[1] == 5
    assert all(r[r[k]] == k for k in r)
    r29 = wilson_involution(29)
    assert all((v * v + k * k) % 29 == 0 and v != k for k, v in r29.items())
    with pytest.raises(ValueError):
        wilson_involution(7)


def test_wilson_involution_is_fixed_point_free_permutation():
    for p in primes_between(13, 400):
        if p % 4 != 1:
            continue
        r = wilson_involution(p)
        half = (p - 1) // 2
        assert sorted(r.values()) == list(range(1, half + 1))
        assert all(r[r[k]] == k and r[k] != k for k in r)


def test_factorize_and_phi():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 10**6)
        f = factorize(n)
        assert math.prod(q**e for q, e in f.items()) == n
        assert all(is_prime(q) for q in f)
        assert euler_phi(n) == round(n * math.prod(1 - 1 / q for q in f))
    assert euler_phi(7) == 6 and euler_phi(21) == 12
