import math

import pytest

from legdet.arith import jacobi, primes_between
from legdet.quadfield import (
    ClassNumberMismatch,
    QuadInt,
    class_number_imag,
    class_number_real,
    class_number_real_analytic,
    class_number_real_forms,
    count_reduced_definite_forms,
    dirichlet_crosscheck,
    fundamental_unit,
    fundamental_unit_search,
    invariants,
    pow_unit,
)

PRIMES_499 = primes_between(3, 499)


def test_unit_examples():
    assert fundamental_unit(5) == QuadInt(1, 1, 5)
    assert fundamental_unit(3) == QuadInt(4, 2, 3)
    assert fundamental_unit(13) == QuadInt(3, 1, 13)


@pytest.mark.parametrize("bad", [2, 9, 15, 1])
def test_unit_rejects_non_odd_primes(bad):
    with pytest.raises(ValueError):
        fundamental_unit(bad)


def test_quadint_parity_checked():
    with pytest.raises(ValueError):
        QuadInt(1, 2, 5)


def test_pow_unit_examples():
    e5 = fundamental_unit(5)
    assert pow_unit(e5, 0) == QuadInt(2, 0, 5)
    assert pow_unit(e5, 2) == QuadInt(3, 1, 5)
    assert pow_unit(e5, 3) == QuadInt(4, 2, 5)


def test_units_have_norm_pm1_and_match_search_below_500():
    for p in PRIMES_499:
        u = fundamental_unit(p)
        assert u.two_a ** 2 - p * u.two_b ** 2 in (4, -4)
        # the minimal-u search oracle is only cheap where the unit is small
        if u.two_b < 10**6:
            assert fundamental_unit_search(p) == u


def test_class_number_real_examples():
    assert class_number_real(5) == 1
    assert class_number_real(13) == 1
    assert class_number_real(229) == 3


def test_real_class_number_dual_computation_below_500():
    for p in PRIMES_499:
        assert class_number_real_analytic(p) == class_number_real_forms(p)


def test_real_class_number_analytic_fails_loudly_on_wrong_unit():
    # eps^2 in place of eps halves the regulator's inverse: h would come out 1/2
    with pytest.raises(ArithmeticError):
        class_number_real_analytic(13, pow_unit(fundamental_unit(13), 2))


def test_class_number_imag_examples():
    assert class_number_imag(7) == 1
    assert class_number_imag(23) == 3
    assert class_number_imag(11) == 1
    for bad in (3, 5, 13):
        with pytest.raises(ValueError):
            class_number_imag(bad)


def test_imag_class_number_matches_form_count_and_is_odd():
    for p in PRIMES_499:
        if p % 4 == 3 and p > 3:
            h = class_number_imag(p)
            assert h == count_reduced_definite_forms(-p)
            assert h % 2 == 1


def test_invariants_examples():
    inv = invariants(5)
    assert (inv.ab.two_a, inv.ab.two_b) == (1, 1)
    assert (inv.ab_prime.two_a, inv.ab_prime.two_b) == (4, 2)
    assert inv.a_prime == 2 and inv.b_prime == 1
    assert invariants(13).ab == QuadInt(3, 1, 13)
    assert invariants(7).h_minus == 1
    assert invariants(13).h_minus == 0


def test_invariant_exponents_by_repeated_multiplication():
    for p in PRIMES_499[:40]:
        inv = invariants(p)
        acc = QuadInt(2, 0, p)
        for _ in range(inv.h_plus):
            acc = acc * inv.eps
        assert acc == inv.ab
        for _ in range((1 - jacobi(2, p)) * inv.h_plus):
            acc = acc * inv.eps
        assert acc == inv.ab_prime


def test_dirichlet_crosscheck_examples():
    assert dirichlet_crosscheck(5, 1)
    assert dirichlet_crosscheck(13, 2)
    assert not dirichlet_crosscheck(13, 1, h=2)
    with pytest.raises(ValueError):
        dirichlet_crosscheck(7, 1)
    with pytest.raises(ValueError):
        dirichlet_crosscheck(13, 26)


def test_quadint_float_matches_norm():
    u = fundamental_unit(61)
    conj = (u.two_a - u.two_b * math.sqrt(61)) / 2
    assert abs(float(u) * conj) == pytest.approx(1.0, rel=1e-6)


def test_mismatch_exception_is_arithmetic():
    assert issubclass(ClassNumberMismatch, ArithmeticError)
