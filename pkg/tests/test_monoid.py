from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_atoms, oracle_value_buckets
from puiseux import (
    BudgetExceededError,
    Factorization,
    FgMonoid,
    InputError,
    NotAMemberError,
    fg_new,
    internal_sum,
)

F = Fraction


@pytest.fixture
def m23():
    return FgMonoid([2, 3])


def parts_of(zs):
    return [dict(z.parts) for z in zs]


def test_fg_new_computes_atoms():
    assert fg_new([2, 3, 4]).atoms == (F(2), F(3))
    assert fg_new([F(1, 2), F(3, 4)]).atoms == (F(1, 2), F(3, 4))
    assert fg_new([2, 3]).atoms == (F(2), F(3))
    assert fg_new(["3/4", 2, 2]).generators == (F(3, 4), F(2))


def test_fg_new_rejects_nonpositive():
    with pytest.raises(InputError):
        fg_new([2, 0])
    with pytest.raises(InputError):
        fg_new([])


def test_integerization(m23):
    m = fg_new([F(1, 2), F(3, 4)])
    assert m.scale == 4
    assert m.int_gens == (2, 3)
    assert m23.scale == 1


def test_contains(m23):
    assert not m23.contains(1)
    assert m23.contains(7)
    assert m23.contains(0)
    assert not fg_new([F(1, 2), F(3, 4)]).contains(F(1, 3))
    with pytest.raises(InputError):
        m23.contains(-1)


def test_divides(m23):
    assert m23.divides(2, 6)
    assert not m23.divides(3, 4)
    assert m23.divides(0, 5)
    assert not m23.divides(6, 2)


def test_divisors(m23):
    assert m23.divisors(6) == (F(0), F(2), F(3), F(4), F(6))
    assert m23.divisors(4) == (F(0), F(2), F(4))
    assert m23.divisors(0) == (F(0),)
    with pytest.raises(NotAMemberError):
        m23.divisors(1)


def test_factorizations(m23):
    assert parts_of(m23.factorizations(6)) == [{F(2): 3}, {F(3): 2}]
    halves = fg_new([F(1, 2), F(3, 4)])
    assert parts_of(halves.factorizations(F(3, 2))) == [
        {F(1, 2): 3},
        {F(3, 4): 2},
    ]
    assert parts_of(m23.factorizations(2)) == [{F(2): 1}]
    assert parts_of(m23.factorizations(0)) == [{}]
    with pytest.raises(NotAMemberError):
        m23.factorizations(F(1, 2))


def test_factorization_set_is_canonically_ordered(m23):
    zs = m23.factorizations(12)
    # largest atom's multiplicity counts up: 6*2 first, then 3*2 + 2*3, then 4*3
    assert parts_of(zs) == [{F(2): 6}, {F(2): 3, F(3): 2}, {F(3): 4}]
    assert zs.to_json() == {
        "target": "12",
        "items": [
            {"parts": [["2", 6]], "length": 6},
            {"parts": [["2", 3], ["3", 2]], "length": 5},
            {"parts": [["3", 4]], "length": 4},
        ],
    }


def test_lengths(m23):
    assert m23.lengths(12).lengths == (4, 5, 6)
    assert m23.lengths(6).lengths == (2, 3)
    assert m23.lengths(0).lengths == (0,)


def test_factorizations_of_length(m23):
    assert parts_of(m23.factorizations_of_length(12, 5)) == [{F(2): 3, F(3): 2}]
    assert len(m23.factorizations_of_length(12, 7)) == 0
    assert parts_of(m23.factorizations_of_length(6, 2)) == [{F(3): 2}]
    with pytest.raises(InputError):
        m23.factorizations_of_length(6, 0)


def test_mcd_set(m23):
    assert m23.mcd_set(4, 6) == (F(4),)
    assert m23.mcd_set(2, 3) == (F(0),)
    assert m23.mcd_set(6, 6) == (F(6),)
    assert m23.mcd_set(0, 5) == (F(0),)


def test_is_mcd(m23):
    assert m23.is_mcd(4, 6, 4)
    assert not m23.is_mcd(4, 6, 2)
    assert not m23.is_mcd(4, 6, 0)
    assert not m23.is_mcd(4, 6, 1)  # 1 is not even a member
    with pytest.raises(NotAMemberError):
        m23.is_mcd(1, 6, 0)


def test_every_mcd_satisfies_the_predicate(m23):
    for x in (0, 2, 3, 4, 5, 6, 7, 12):
        for y in (0, 2, 3, 4, 5, 6, 7, 12):
            for d in m23.mcd_set(x, y):
                assert m23.is_mcd(x, y, d)


def test_internal_sum():
    s = internal_sum(fg_new([2]), fg_new([3]))
    assert s.atoms == (F(2), F(3))
    assert not s.contains(1)
    m = fg_new([2, 3])
    assert internal_sum(m, m) == m
    third = internal_sum(fg_new([F(1, 2)]), fg_new([F(1, 3)]))
    assert third.atoms == (F(1, 3), F(1, 2))
    assert (fg_new([2]) + fg_new([3])).atoms == (F(2), F(3))


def test_classify(m23):
    report = m23.classify()
    assert report["min_positive"] == "2"
    assert report["atom_count"] == 2
    assert report["scale"] == 1
    assert report["flags"]["ffm"] == {"value": True, "provenance": "paper"}
    assert report["flags"]["bbm"]["value"] is True
    assert report["evidence"]["all_finite"] is True

    cyclic = fg_new([F(1, 2)])
    assert cyclic.classify()["evidence"]["unique_factorization_observed"] is True
    assert m23.classify()["evidence"]["unique_factorization_observed"] is False


def test_budget_guard(m23):
    with pytest.raises(BudgetExceededError):
        FgMonoid([2, 3], budget=1).factorizations(60, budget=1)
    # a sane budget is not consumed across independent calls
    assert len(m23.factorizations(24, budget=10**6)) == 5


def test_divides_matches_divisor_sets(m23):
    for b in (0, 2, 4, 6, 7, 9, 12):
        divs = set(m23.divisors(b))
        for c in (0, 1, 2, 3, 4, 5, 6, 7):
            assert m23.divides(c, b) == (F(c) in divs)


def test_oracle_equivalence_spot_checks():
    for gens in ([2, 3], [3, 5, 7], [4, 6, 9], [2, 3, 4]):
        m = fg_new(gens)
        assert [int(a) for a in m.atoms] == oracle_atoms(list(gens))
        buckets = oracle_value_buckets(list(m.int_atoms), 40)
        for q in range(41):
            if q in buckets:
                got = sorted(
                    tuple(z.multiplicity(a) for a in m.atoms)
                    for z in m.factorizations(q)
                )
                assert got == sorted(buckets[q])
            else:
                assert not m.contains(q)


small_gens = st.lists(
    st.fractions(min_value=F(1, 8), max_value=6, max_denominator=8),
    min_size=1,
    max_size=3,
)


@given(gens=small_gens, t=st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_scaling_invariance(gens, t):
    m = FgMonoid(gens)
    scaled = FgMonoid([t * g for g in gens])
    assert scaled.atoms == tuple(t * a for a in m.atoms)
    q = sum(m.atoms, F(0))
    zs = m.factorizations(q)
    zs_scaled = scaled.factorizations(t * q)
    assert [
        [(t * a, k) for a, k in z.parts] for z in zs
    ] == [list(z.parts) for z in zs_scaled]


@given(gens=small_gens)
@settings(max_examples=60, deadline=None)
def test_atoms_generate_the_monoid(gens):
    m = FgMonoid(gens)
    assert set(m.atoms) <= set(m.generators)
    for g in m.generators:
        assert len(m.factorizations(g)) >= 1


def test_concurrent_queries_share_one_monoid():
    from concurrent.futures import ThreadPoolExecutor

    m = fg_new([F(5, 4), F(7, 6)])

    def probe(t):
        q = F(t, 12)
        inside = m.contains(q)
        if inside:
            assert all(z.value == q for z in m.factorizations(q))
        return inside

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(probe, range(1, 200)))
    # same answers as a fresh, single-threaded monoid
    fresh = fg_new([F(5, 4), F(7, 6)])
    assert results == [fresh.contains(F(t, 12)) for t in range(1, 200)]


def test_factorization_value_and_length():
    z = Factorization.of({F(3, 4): 4, F(2): 1})
    assert z.length == 5
    assert z.value == 5
    assert z.multiplicity(F(3, 4)) == 4
    assert z.multiplicity(7) == 0
    assert str(z) == "4·3/4 + 1·2"
    with pytest.raises(InputError):
        Factorization.of({F(1, 2): 0})
