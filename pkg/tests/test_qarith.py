import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from puiseux import InputError, lcm_den, nth_prime, padic, parse_rational, reduce
from puiseux.qarith import format_rational, is_prime, prime_factors


def test_reduce_known_values():
    assert reduce(6, 4) == Fraction(3, 2)
    assert reduce(-3, -6) == Fraction(1, 2)
    assert reduce(50 - 21, 336) == Fraction(29, 336)
    assert reduce(0, 7) == 0


def test_reduce_rejects_zero_denominator():
    with pytest.raises(InputError):
        reduce(1, 0)


def test_padic_known_values():
    assert padic(Fraction(9, 8), 2) == -3
    assert padic(Fraction(9, 8), 3) == 2
    assert padic(Fraction(6, 5), 5) == -1
    assert padic(12, 2) == 2


def test_padic_rejects_bad_input():
    with pytest.raises(InputError):
        padic(0, 2)
    with pytest.raises(InputError):
        padic(Fraction(1, 2), 4)


def test_nth_prime_sequences():
    assert nth_prime(3, 0) == 5
    assert nth_prime(2, 3) == 5
    assert nth_prime(1, 5) == 5
    assert [nth_prime(i, 3) for i in range(1, 9)] == [3, 5, 7, 11, 13, 17, 19, 23]
    with pytest.raises(InputError):
        nth_prime(0, 0)


def test_lcm_den():
    assert lcm_den([Fraction(1, 2), Fraction(3, 4)]) == 4
    assert lcm_den([2, 3]) == 1
    assert lcm_den([Fraction(1, 6), Fraction(1, 20), Fraction(1, 56)]) == 840
    with pytest.raises(InputError):
        lcm_den([])


def test_rational_wire_format():
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("29/336") == Fraction(29, 336)
    assert parse_rational(" 7 ") == 7
    with pytest.raises(InputError):
        parse_rational("1.5")
    with pytest.raises(InputError):
        parse_rational("1/0")


nonzero_rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=40
).filter(lambda q: q != 0)


@given(q=nonzero_rationals, p=st.sampled_from([2, 3, 5, 7, 11]))
def test_padic_reciprocal_flips_sign(q, p):
    assert padic(1 / q, p) == -padic(q, p)


@given(a=nonzero_rationals, b=nonzero_rationals, p=st.sampled_from([2, 3, 5, 7]))
def test_padic_is_additive_on_products(a, b, p):
    assert padic(a * b, p) == padic(a, p) + padic(b, p)


@given(
    parts=st.lists(
        st.fractions(min_value=-20, max_value=20, max_denominator=45), min_size=1, max_size=6
    ),
    p=st.sampled_from([2, 3, 7]),
)
@settings(max_examples=200)
def test_padic_of_sums_with_coprime_denominators(parts, p):
    # the pruning fact: denominators coprime to p keep the sum's valuation >= 0
    parts = [q for q in parts if q.denominator % p != 0]
    total = sum(parts, Fraction(0))
    if total != 0:
        assert padic(total, p) >= 0


@given(n=st.integers(1, 60), lb=st.sampled_from([0, 2, 3, 5]))
def test_nth_prime_strictly_increasing(n, lb):
    assert nth_prime(n, lb) < nth_prime(n + 1, lb)
    assert nth_prime(n, lb) >= lb
    assert is_prime(nth_prime(n, lb))


@given(n=st.integers(2, 5000))
def test_prime_factors_multiply_back(n):
    factors = prime_factors(n)
    assert all(is_prime(p) for p in factors)
    remaining = n
    for p in factors:
        while remaining % p == 0:
            remaining //= p
    assert remaining == 1
    assert math.prod(factors) <= n
