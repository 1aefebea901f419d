import random
from fractions import Fraction

import pytest

from rainbowramsey.lattice import all_masks
from rainbowramsey.lubell import binom
from rainbowramsey.corechain import comparability
from rainbowramsey.posets import find_copy, poset_by_name, standard_poset
from rainbowramsey.colorings import Coloring, find_pattern, validate_witness
from rainbowramsey.search import (
    SearchError,
    fork_can_avoid,
    fork_can_avoid_naive,
    fork_f_small,
    fork_g,
    fork_g_sweep,
    iter_canonical_colorings,
    rainbow_ramsey,
    ramsey,
    threshold_F,
    two_color_partial_exact,
    two_color_size_dp_oracle,
)

C2 = poset_by_name("C2")
C3 = poset_by_name("C3")
V2 = poset_by_name("V2")
A3 = poset_by_name("A3")


# --- R and RR ---------------------------------------------------------------

def test_ramsey_chain_values():
    assert ramsey([C2], "weak", 2).value == 1
    assert ramsey([C2, C2], "weak", 3).value == 2
    assert ramsey([C3, C3], "weak", 4).value == 4


def test_ramsey_witness_is_avoiding():
    res = ramsey([C3, C3], "weak", 4)
    w = res.witness
    assert w is not None and w.ground == 3 and w.total
    for c in range(w.num_colors):
        assert find_copy(w.class_family(c), C3, "weak") is None


def test_ramsey_cap_and_budget():
    res = ramsey([C3, C3], "weak", n_cap=2)
    assert res.value == ">2" and res.witness.ground == 2
    res = ramsey([C3, C3], "weak", n_cap=4, budget=5)
    assert res.budget_exhausted and isinstance(res.value, str)


def test_rainbow_ramsey_values():
    assert rainbow_ramsey(C2, C2, "weak", 2).value == 1
    assert rainbow_ramsey(C2, C3, "weak", 3).value == 2


def test_rainbow_ramsey_strong_lower_bound_via_witness():
    # the level coloring of B_4 avoids (mono strong C2, rainbow strong A3),
    # certifying RR*(C2, A3) >= 5 without any exhaustive n=4 run
    from rainbowramsey.colorings import level_coloring
    v = validate_witness(level_coloring(4), C2, A3, "strong", "strong")
    assert v.avoided


def test_section2_proposition_fork_target():
    # RR(P, V_2) = R_2(P) for P in {C2, C3}
    assert rainbow_ramsey(C2, V2, "weak", 3).value == ramsey([C2, C2], "weak", 3).value
    assert rainbow_ramsey(C3, V2, "weak", 4).value == ramsey([C3, C3], "weak", 4).value


def test_easy_proposition_consequence_on_witnesses():
    # an avoiding coloring for R_{|Q|-1}(P) is an avoiding coloring for RR(P,Q)
    for p, q in ((C2, C3), (C3, C3), (C3, A3)):
        res = ramsey([p] * (q.size - 1), "weak", n_cap=3)
        w = res.witness
        assert w is not None
        assert validate_witness(w, p, q, "weak", "weak").avoided


def test_canonical_enumeration_counts_are_bell_numbers():
    assert sum(1 for _ in iter_canonical_colorings(1)) == 2       # Bell(2)
    assert sum(1 for _ in iter_canonical_colorings(2)) == 15      # Bell(4)
    assert sum(1 for _ in iter_canonical_colorings(3)) == 4140    # Bell(8)


def test_color_renaming_invariance():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(1, 3)
        masks = list(all_masks(n))
        colors = [rng.randrange(3) for _ in masks]
        col = Coloring(n, list(zip(masks, colors)), total=True)
        perm = [1, 2, 0]
        col2 = Coloring(n, [(m, perm[c]) for m, c in zip(masks, colors)], total=True)
        for pattern, mode, chrom in ((C2, "weak", "mono"), (A3, "strong", "rainbow"),
                                     (C3, "weak", "rainbow")):
            a = find_pattern(col, pattern, mode, chrom) is None
            b = find_pattern(col2, pattern, mode, chrom) is None
            assert a == b


# --- thresholds -------------------------------------------------------------

def test_threshold_f_prime_known_values():
    assert threshold_F(4, 2, partial=True).value == 4
    assert threshold_F(3, 2, partial=True).value == 3
    assert threshold_F(2, 2, partial=False).value == 3


def test_threshold_f3_small_values():
    assert threshold_F(2, 3, partial=False).value == 2
    assert threshold_F(3, 3, partial=False).value == 3
    assert threshold_F(4, 3, partial=False).value == 6


def test_threshold_witness_avoids_and_hits_max_min():
    res = threshold_F(4, 3, partial=False)
    w = res.witness
    assert w.total and min(w.class_sizes()) == res.details["max_min"] == 5
    assert find_pattern(w, A3, "strong", "rainbow") is None


def test_threshold_rejects_unsupported():
    with pytest.raises(SearchError):
        threshold_F(5, 2, partial=True)
    with pytest.raises(SearchError):
        threshold_F(3, 4, partial=False)


# --- the exact two-color extremal values ------------------------------------

def test_two_color_size_matches_brute():
    for n in (1, 2, 3, 4):
        assert two_color_partial_exact(n, "size").value == threshold_F(n, 2, True).value


def test_two_color_size_closed_form_window():
    for n in range(4, 13):
        expect = (1 << (n // 2)) + (2 if n % 2 else 0)
        assert two_color_partial_exact(n, "size").value == expect


def test_two_color_size_pareto_oracle_agreement():
    for n in range(1, 13):
        assert two_color_partial_exact(n, "size").value == two_color_size_dp_oracle(n) + 1


def test_two_color_size_witness_valid():
    for n in (4, 5, 8, 9):
        res = two_color_partial_exact(n, "size")
        w = res.witness
        assert min(w.class_sizes()) == res.value - 1
        assert comparability([w.class_family(0), w.class_family(1)])


def _mass_config_brute(n):
    """Max-min mass by brute force over every core-chain configuration:
    all level subsets containing 0 and n, all block colorings, all point
    assignments.  Independent of the Pareto DP's pruning and dominance."""
    from itertools import combinations
    from rainbowramsey.lubell import lubell_interval

    def pt(l):
        return Fraction(1, binom(n, l))

    best = Fraction(0)
    inner = list(range(1, n))
    for r in range(len(inner) + 1):
        for chosen in combinations(inner, r):
            levels = (0,) + chosen + (n,)
            blocks = [(levels[i], levels[i + 1])
                      for i in range(len(levels) - 1) if levels[i + 1] - levels[i] >= 2]
            bw = [lubell_interval(n, a, b) - pt(a) - pt(b) for a, b in blocks]
            for bcol in range(1 << len(blocks)):
                base0 = sum((w for i, w in enumerate(bw) if not bcol >> i & 1),
                            Fraction(0))
                base1 = sum((w for i, w in enumerate(bw) if bcol >> i & 1),
                            Fraction(0))
                for pcol in range(1 << len(levels)):
                    m0, m1 = base0, base1
                    for i, l in enumerate(levels):
                        if pcol >> i & 1:
                            m1 += pt(l)
                        else:
                            m0 += pt(l)
                    v = min(m0, m1)
                    if v > best:
                        best = v
    return best


def test_two_color_mass_small_exact_and_config_brute():
    assert two_color_partial_exact(2, "mass").value == 1
    assert two_color_partial_exact(3, "mass").value == 2
    assert two_color_partial_exact(4, "mass").value == 2
    for n in (2, 3, 4, 5, 6):
        assert two_color_partial_exact(n, "mass").value == _mass_config_brute(n)


def test_fork_g_values():
    assert fork_g(5, 1) == 3
    assert fork_g(3, 2) == 3
    assert [fork_g(r, 1) for r in (1, 2, 3, 4, 7, 8)] == [1, 2, 2, 3, 3, 4]


def test_fork_g_sweep_matches_pointwise():
    sweep = fork_g_sweep(300, 2)
    for r in (1, 2, 5, 77, 300):
        assert sweep[r] == fork_g(r, 2)


def test_fork_can_avoid_matches_naive():
    for n in range(1, 10):
        for r in (1, 2, 3, 5, 9, 17):
            for k in (1, 2, 3):
                assert fork_can_avoid(n, r, k) == fork_can_avoid_naive(n, r, k)


def test_fork_naive_uses_real_embedding_counts():
    from rainbowramsey.search import fork_block_check_naive
    # cross-check the bitset superset counter against find_copy on small blocks
    from rainbowramsey.lattice import levels_family
    for n in (3, 4, 5):
        for lo in range(n):
            for hi in range(lo, n + 1):
                for r in (1, 2, 3, 6):
                    fam = levels_family(n, lo, hi)
                    expect = find_copy(fam, standard_poset("chain", 2) if r == 1
                                       else standard_poset("fork", r), "weak") is not None
                    assert fork_block_check_naive(n, lo, hi, r) == expect


def test_fork_f_small():
    assert fork_f_small(2, 2, 4).value == 3
    assert fork_f_small(5, 1, 4).value == 3
    assert fork_f_small(2, 1, 4).value == 2
    with pytest.raises(SearchError):
        fork_f_small(2, 3, 3)


def test_search_result_jsonable():
    res = rainbow_ramsey(C2, C3, "weak", 3)
    obj = res.to_jsonable()
    assert obj["value"] == 2 and obj["checked"] == {"n_min": 0, "n_max": 2}
    assert obj["witness"]["n"] == 1


def _ramsey2_literal(n, p1, p2):
    """Independent oracle: literally try all 2^(2^n) two-colorings."""
    from rainbowramsey.lattice import Family
    masks = list(all_masks(n))
    for bits in range(1 << len(masks)):
        c1 = Family.make(n, (m for i, m in enumerate(masks) if bits >> i & 1))
        c2 = Family.make(n, (m for i, m in enumerate(masks) if not bits >> i & 1))
        if find_copy(c1, p1, "weak") is None and find_copy(c2, p2, "weak") is None:
            return True  # avoiding coloring exists
    return False


def test_ramsey_distinct_patterns():
    res = ramsey([C2, C3], "weak", 3)
    assert res.value == 3
    for n in (1, 2):
        assert _ramsey2_literal(n, C2, C3)  # avoiding colorings exist below
    assert not _ramsey2_literal(3, C2, C3)  # forced at the value


def test_rainbow_ramsey_antichain_target():
    # for Q = A_2 only monochromatic colorings avoid a rainbow weak A_2,
    # so RR(P, A_2) is the first cube containing a weak copy of P
    a2 = poset_by_name("A2")
    assert rainbow_ramsey(C3, a2, "weak", 3).value == 2
    assert rainbow_ramsey(V2, a2, "weak", 3).value == 2
    seqs = list(iter_canonical_colorings(2))
    masks = sorted(all_masks(2), key=lambda m: (m.bit_count(), m))
    forced = 0
    for seq in seqs:
        col = Coloring(2, list(zip(masks, seq)), total=True)
        v = validate_witness(col, C3, a2, "weak", "weak")
        forced += 0 if v.avoided else 1
    assert forced == len(seqs) == 15


def test_ramsey_strong_mode():
    # two colors force a nested same-color pair already on B_2: the empty
    # set and the full set are comparable to everything
    assert ramsey([C2, C2], "strong", 3).value == 2


def test_rainbow_ramsey_strong_mode_with_partition_cross_check():
    a2 = poset_by_name("A2")
    res = rainbow_ramsey(C2, a2, "strong", 3)
    assert res.value == 3
    # independent check at n=3: all Bell(8) = 4140 canonical partitions
    masks = sorted(all_masks(3), key=lambda m: (m.bit_count(), m))
    forced = 0
    for seq in iter_canonical_colorings(3):
        col = Coloring(3, list(zip(masks, seq)), total=True)
        if not validate_witness(col, C2, a2, "strong", "strong").avoided:
            forced += 1
    assert forced == 4140
    # and the witness at n=2 really avoids both patterns
    w = res.witness
    assert w.ground == 2
    assert validate_witness(w, C2, a2, "strong", "strong").avoided


def test_two_color_cap_error():
    with pytest.raises(SearchError):
        two_color_partial_exact(41, "size")
    with pytest.raises(SearchError):
        two_color_partial_exact(0, "mass")
