import random
from fractions import Fraction

import pytest

from conftest import random_extension_instances, random_member
from puiseux import (
    FgMonoid,
    InputError,
    NotAMemberError,
    add_cyclic,
    factorizations_via_offsets,
    fg_new,
    max_cyclic_divisor,
    mcd_via_extension,
    refactor_atom,
)

F = Fraction


@pytest.fixture
def m23():
    return fg_new([2, 3])


def test_add_cyclic(m23):
    ext = add_cyclic(m23, F(1, 2))
    assert ext.monoid.atoms == (F(1, 2),)
    assert not ext.r_in_base

    ext = add_cyclic(m23, F(3, 4))
    assert ext.monoid.atoms == (F(3, 4), F(2))

    unchanged = add_cyclic(m23, 2)
    assert unchanged.r_in_base
    assert unchanged.monoid is m23

    with pytest.raises(InputError):
        add_cyclic(m23, 0)


def test_max_cyclic_divisor(m23):
    s = add_cyclic(m23, F(3, 4)).monoid
    assert max_cyclic_divisor(s, 3, F(3, 4)) == 4
    assert max_cyclic_divisor(s, 2, F(3, 4)) == 0
    assert max_cyclic_divisor(s, 0, F(3, 4)) == 0
    with pytest.raises(NotAMemberError):
        max_cyclic_divisor(s, F(1, 4), F(3, 4))


def test_refactor_atom(m23):
    z = refactor_atom(m23, F(3, 4), 3)
    assert dict(z.parts) == {F(3, 4): 4}

    z = refactor_atom(m23, F(3, 4), 2)
    assert dict(z.parts) == {F(2): 1}

    # r far above the atom forces multiple 0 and leaves the atom alone
    z = refactor_atom(m23, F(7, 2), 3)
    assert dict(z.parts) == {F(3): 1}


def test_refactor_atom_rejects_bad_input(m23):
    with pytest.raises(InputError):
        refactor_atom(m23, 7, 3)  # 7 = 2+2+3 already lies in the monoid
    with pytest.raises(InputError):
        refactor_atom(m23, F(3, 4), 4)  # 4 is not an atom


def test_mcd_via_extension(m23):
    r = F(3, 4)
    assert mcd_via_extension(m23, r, 2, 4) == 2
    assert mcd_via_extension(m23, r, F(3, 4), F(3, 2)) == F(3, 4)
    assert mcd_via_extension(m23, r, 2, 3) == 0
    with pytest.raises(InputError):
        mcd_via_extension(m23, 2, 2, 4)  # r inside the base monoid
    with pytest.raises(NotAMemberError):
        mcd_via_extension(m23, r, F(1, 2), 2)


def test_mcd_via_extension_result_satisfies_predicate(m23):
    r = F(3, 4)
    s = add_cyclic(m23, r).monoid
    for x in (0, F(3, 4), 2, 3, F(15, 4), 6):
        for y in (0, F(3, 4), F(3, 2), 2, 5):
            d = mcd_via_extension(m23, r, x, y)
            assert s.is_mcd(x, y, d)


def test_factorizations_via_offsets(m23):
    r = F(3, 4)
    zs = factorizations_via_offsets(m23, r, 5)
    assert [dict(z.parts) for z in zs] == [{F(3, 4): 4, F(2): 1}]

    zs = factorizations_via_offsets(m23, r, F(3, 4))
    assert [dict(z.parts) for z in zs] == [{F(3, 4): 1}]

    zs = factorizations_via_offsets(m23, F(5, 2), 2)
    assert [dict(z.parts) for z in zs] == [{F(2): 1}]

    with pytest.raises(NotAMemberError):
        factorizations_via_offsets(m23, r, F(1, 2))
    with pytest.raises(InputError):
        factorizations_via_offsets(m23, 2, 4)


def test_offsets_match_direct_enumeration_randomized():
    rng = random.Random(7)
    for m, r in random_extension_instances(seed=11, count=25):
        s = add_cyclic(m, r).monoid
        target = random_member(rng, s)
        assert factorizations_via_offsets(m, r, target) == s.factorizations(target)


def test_refactor_atom_randomized():
    for m, r in random_extension_instances(seed=13, count=25):
        s = add_cyclic(m, r).monoid
        s_atoms = set(s.atoms)
        for a in m.atoms:
            z = refactor_atom(m, r, a)
            assert z.value == a
            assert all(atom in s_atoms for atom, _ in z.parts)
            assert z.multiplicity(r) == max_cyclic_divisor(s, a, r)
            for atom, _ in z.parts:
                if atom != r:
                    assert not s.divides(r, atom)


def test_mcd_randomized():
    rng = random.Random(17)
    for m, r in random_extension_instances(seed=19, count=25):
        s = add_cyclic(m, r).monoid
        x, y = random_member(rng, s, 4), random_member(rng, s, 4)
        d = mcd_via_extension(m, r, x, y)
        assert s.is_mcd(x, y, d)
        bx, by = random_member(rng, m, 4), random_member(rng, m, 4)
        for d in m.mcd_set(bx, by):
            assert m.is_mcd(bx, by, d)


def test_extension_preserves_atomicity_of_generators():
    # every generator of M + N factors over the recomputed atoms
    rng = random.Random(23)
    for _ in range(20):
        gens_m = {F(rng.randint(1, 8), rng.randint(1, 6)) for _ in range(rng.randint(1, 3))}
        gens_n = {F(rng.randint(1, 8), rng.randint(1, 6)) for _ in range(rng.randint(1, 2))}
        s = FgMonoid(gens_m) + FgMonoid(gens_n)
        for g in s.generators:
            assert len(s.factorizations(g)) >= 1
