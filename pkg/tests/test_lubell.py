import random
from fractions import Fraction

import pytest

from rainbowramsey.lattice import Family, LatticeError, all_masks, random_family
from rainbowramsey.lubell import (
    binom,
    lubell_mass,
    lubell_subcube,
    lubell_subcube_direct,
    maxpart_identity_residual,
)
from rainbowramsey.posets import find_copy, standard_poset


def test_mass_of_whole_cube_is_n_plus_1():
    for n in range(7):
        assert lubell_mass(Family.whole_cube(n)) == n + 1


def test_mass_of_one_level_is_1():
    for n in (3, 5):
        for ell in range(n + 1):
            fam = Family.make(n, (m for m in all_masks(n) if m.bit_count() == ell))
            assert lubell_mass(fam) == 1


def test_mass_of_extremes():
    assert lubell_mass(Family.make(6, [0, (1 << 6) - 1])) == 2


def test_subcube_closed_form_examples():
    assert lubell_subcube(4, 1, 1) == Fraction(5, 6)
    for n in (3, 6, 9):
        assert lubell_subcube(n, 0, 0) == n + 1
        for a in range(n + 1):
            assert lubell_subcube(n, a, n - a) == Fraction(1, binom(n, a))


def test_subcube_closed_equals_direct():
    for n in range(10):
        for a in range(n + 1):
            for b in range(n - a + 1):
                assert lubell_subcube(n, a, b) == lubell_subcube_direct(n, a, b)


def test_subcube_parameter_errors():
    with pytest.raises(LatticeError):
        lubell_subcube(3, 2, 2)


def test_residual_zero_cases():
    assert maxpart_identity_residual(Family.make(4, [0b1111])) == 0
    mid = Family.make(4, (m for m in all_masks(4) if m.bit_count() == 2))
    assert maxpart_identity_residual(mid) == 0


def test_residual_zero_random():
    rng = random.Random(55)
    for _ in range(40):
        n = rng.randint(1, 7)
        fam = random_family(n, rng, density=rng.choice([0.2, 0.4]))
        assert maxpart_identity_residual(fam) == 0


def test_k_lym_bound_on_chain_free_families():
    # a C_{k+1}-free family has mass at most k
    rng = random.Random(99)
    checked = 0
    for _ in range(120):
        n = rng.randint(2, 7)
        k = rng.choice([1, 2, 3])
        fam = random_family(n, rng, density=rng.choice([0.15, 0.35]))
        if find_copy(fam, standard_poset("chain", k + 1), "weak") is None:
            assert lubell_mass(fam) <= k
            checked += 1
    assert checked > 20
