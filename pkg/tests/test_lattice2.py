import pytest

from puiseux import (
    InputError,
    LatticePoint,
    lat_atomic_elements_in_box,
    lat_atoms_in_box,
    lat_contains,
    lat_factorizations_in_box,
    lex_sum_check,
)

P = LatticePoint


def test_membership_closed_forms():
    assert lat_contains("upperhalf", P(-5, 2))
    assert not lat_contains("upperhalf", P(1, 0))
    assert lat_contains("upperhalf", P(0, 0))

    assert not lat_contains("lexcone", P(-3, 0))
    assert lat_contains("lexcone", P(-3, 1))
    assert lat_contains("lexcone", P(3, 0))

    assert lat_contains("quadrant", P(0, 0))
    assert not lat_contains("quadrant", P(-1, 2))

    with pytest.raises(InputError):
        lat_contains("cone", P(0, 0))


def test_atoms_in_box():
    assert lat_atoms_in_box("quadrant", 2) == (P(0, 1), P(1, 0))
    assert lat_atoms_in_box("upperhalf", 3) == tuple(
        sorted(P(n, 1) for n in range(-3, 4))
    )
    assert lat_atoms_in_box("lexcone", 10) == (P(1, 0),)


def test_lexcone_atom_set_is_stable_in_the_box():
    for bound in range(1, 7):
        assert lat_atoms_in_box("lexcone", bound) == (P(1, 0),)


def test_lex_sum_check():
    assert lex_sum_check(1)
    assert lex_sum_check(5)
    assert lex_sum_check(10)


def test_atomic_elements():
    assert lat_atomic_elements_in_box(5) == tuple(P(m, 0) for m in range(6))
    assert lat_atomic_elements_in_box(1) == (P(0, 0), P(1, 0))
    assert P(0, 1) not in lat_atomic_elements_in_box(8)


def test_quadrant_factorizations_are_unique():
    for x in range(4):
        for y in range(4):
            zs = lat_factorizations_in_box("quadrant", P(x, y), 4)
            assert len(zs) == 1
            assert zs[0] == tuple(sorted([P(0, 1)] * y + [P(1, 0)] * x))


def test_upperhalf_length_sets_are_singletons():
    for v in (P(0, 1), P(2, 2), P(-1, 3)):
        zs = lat_factorizations_in_box("upperhalf", v, 5)
        assert {len(z) for z in zs} == {v.y}


def test_upperhalf_factorization_counts_grow_with_box():
    counts = [
        len(lat_factorizations_in_box("upperhalf", P(0, 2), bound))
        for bound in (2, 4, 6)
    ]
    assert counts == [3, 5, 7]  # pairs (n,1) + (-n,1) for |n| <= bound


def _common_divisors_in_box(kind, a, b, bound):
    out = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            d = P(x, y)
            if all(lat_contains(kind, v) for v in (d, a - d, b - d)):
                out.append(d)
    return out


def test_upperhalf_lower_point_is_maximal_common_divisor():
    # strong atomicity sample: for y1 < y2, u1 divides u2, and the residual
    # pair {0, u2 - u1} has no nonzero common divisor, so u1 is a maximal
    # common divisor of {u1, u2}
    bound = 6
    for u1 in (P(-1, 1), P(2, 1), P(0, 2)):
        for u2 in (P(0, 3), P(-2, 4)):
            assert lat_contains("upperhalf", u2 - u1)
            residual_divisors = _common_divisors_in_box("upperhalf", P(0, 0), u2 - u1, bound)
            assert residual_divisors == [P(0, 0)]


def test_lexcone_factorizations():
    assert lat_factorizations_in_box("lexcone", P(3, 0), 5) == ((P(1, 0),) * 3,)
    assert lat_factorizations_in_box("lexcone", P(0, 1), 5) == ()
    with pytest.raises(InputError):
        lat_factorizations_in_box("lexcone", P(-1, 0), 5)
