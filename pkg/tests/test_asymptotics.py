import math
import random
from fractions import Fraction

import pytest

from rainbowramsey.asymptotics import (
    AsymptoticsError,
    BoundInputs,
    binary_entropy,
    c_sequence,
    rainbow_antichain_bound,
    inequality_grid,
    min_middle_binomial_dim,
)
from rainbowramsey.search import fork_g, two_color_partial_exact
from rainbowramsey.colorings import g2_lower_coloring
from rainbowramsey.lubell import lubell_mass


def test_entropy_values_and_symmetry():
    assert binary_entropy(0.5) == 1.0
    assert abs(binary_entropy(1 / 3) - 0.9183) < 1e-4
    rng = random.Random(1)
    for _ in range(50):
        c = rng.uniform(1e-6, 1 - 1e-6)
        assert abs(binary_entropy(c) - binary_entropy(1 - c)) < 1e-12
    with pytest.raises(AsymptoticsError):
        binary_entropy(0.0)
    with pytest.raises(AsymptoticsError):
        binary_entropy(1.5)


def test_c_sequence_contract():
    ec = c_sequence(10, 1e-12)
    assert ec.c[0] == 1.0
    assert 1.29 < ec.c[1] < 1.30
    assert all(r < 1e-12 for r in ec.residuals)
    assert all(a < b for a, b in zip(ec.c, ec.c[1:]))
    with pytest.raises(AsymptoticsError):
        c_sequence(0)
    with pytest.raises(AsymptoticsError):
        c_sequence(3, 1e-16)


def test_c_sequence_residual_definition():
    ec = c_sequence(4, 1e-12)
    for k in range(1, 4):
        c_prev, c_next = ec.c[k - 1], ec.c[k]
        lhs = c_next * binary_entropy((c_next - c_prev) / c_next)
        assert abs(lhs - 1.0) < 1e-12


def test_m_k_scan():
    assert min_middle_binomial_dim(2) == 2
    assert min_middle_binomial_dim(3) == 3
    assert min_middle_binomial_dim(4) == 4
    assert min_middle_binomial_dim(6) == 4
    assert min_middle_binomial_dim(7) == 5


def test_rainbow_antichain_bound_chain_instance():
    # chain C_3 is uniformly induced Lubell-bounded with e* = lambda*_max = 2
    out = rainbow_antichain_bound(BoundInputs(3, 2, e_star=2, not_c1_c2=True,
                                      provenance="wired: chain"))
    assert out["m_k"] == 3
    assert out["bound"] == 2 * 2 + 3
    assert out["bound_sharp"] == 2 + 2 * 2  # the RR*(P,A_3) = 2 + 2e*(P) value
    out2 = rainbow_antichain_bound(BoundInputs(2, Fraction(3, 2)))
    assert out2["m_k"] == 2 and out2["bound"] == 1 + 2
    with pytest.raises(AsymptoticsError):
        rainbow_antichain_bound(BoundInputs(1, 2))
    with pytest.raises(AsymptoticsError):
        BoundInputs(3, 1, e_star=2)


def test_inequality_grids_hold():
    for check, step in (("tech-a", 1e-3), ("tech-b", 1e-3), ("tech-c", 1e-3),
                        ("ineq1", 1e-4)):
        rep = inequality_grid(check, step)
        assert rep.max_violation <= 1e-12


def test_tech_c_argmax_on_balance_line():
    # the min is maximized where the two expressions cross: alpha = (1+beta)/2
    rep = inequality_grid("tech-c", 1e-3)
    alpha, beta = rep.argmax
    assert abs(alpha - (1 + beta) / 2) < 2e-3


def test_ineq1_equality_only_at_zero():
    rep = inequality_grid("ineq1", 1e-4)
    assert rep.max_violation == 0.0 and rep.argmax == (0.0,)


def test_fork_ratio_k1_is_exactly_c1_in_the_limit():
    # g_1(r)/log2 r = (floor(log r)+1)/log r -> 1 = c_1 from above
    for j in (4, 10, 20):
        r = 1 << j
        assert fork_g(r, 1) / j == (j + 1) / j


def test_fork_ratio_k2_trend_toward_c2():
    # exact values approach c_2 from above as r grows, mirroring how the
    # k=1 ratio (floor(log r)+1)/log r falls to 1
    c2 = c_sequence(2).c[1]
    ratios = {j: fork_g(1 << j, 2) / j for j in (4, 8, 12, 16, 20)}
    assert all(v > c2 for v in ratios.values())
    assert ratios[20] < ratios[4]
    vals = [ratios[j] for j in (4, 8, 12, 16, 20)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_g2_lower_construction_masses_and_dp_dominance():
    # the exact DP dominates the fixed-|H| construction at every n, and the
    # construction's distance to 1+sqrt(2) shrinks over the window
    target = 1 + math.sqrt(2)
    gaps = []
    for n in (12, 16, 20, 24):
        col = g2_lower_coloring(n)
        m0 = lubell_mass(col.class_family(0))
        m1 = lubell_mass(col.class_family(1))
        dp = two_color_partial_exact(n, "mass").value
        assert dp >= min(m0, m1)
        gaps.append(abs(float(min(m0, m1)) - target))
    assert gaps[-1] < gaps[0]
