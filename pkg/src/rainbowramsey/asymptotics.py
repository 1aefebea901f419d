"""Binary entropy, the fork-Ramsey growth constants, the rainbow-antichain
bound calculator, and numeric grid checks of the closed-form inequalities.

All logarithms are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lubell import binom

SQRT2 = math.sqrt(2.0)


class AsymptoticsError(ValueError):
    pass


def binary_entropy(c: float) -> float:
    """h(c) = -c log2 c - (1-c) log2 (1-c) on (0, 1)."""
    if not 0.0 < c < 1.0:
        raise AsymptoticsError(f"binary_entropy needs 0 < c < 1, got {c}")
    return -c * math.log2(c) - (1.0 - c) * math.log2(1.0 - c)


@dataclass(frozen=True)
class EntropyConstants:
    """Solutions c_1 < c_2 < ... of c_{k+1} h((c_{k+1} - c_k)/c_{k+1}) = 1."""

    c: tuple
    residuals: tuple
    tol: float


def _step_residual(c_next, c_prev):
    return abs(c_next * binary_entropy((c_next - c_prev) / c_next) - 1.0)


def c_sequence(k_max: int, tol: float = 1e-12) -> EntropyConstants:
    """Solve the growth-constant recurrence by bisection.

    c -> c * h((c - c_k)/c) increases from 0 to above 1 on (c_k, c_k + 4]
    (write it as c_k * h(t)/t with t = c_k/c; h(t)/t is strictly
    decreasing), so bisection on that bracket is safe.  c_1 = 1 exactly.
    """
    if k_max < 1:
        raise AsymptoticsError("k_max must be >= 1")
    if tol < 1e-14:
        raise AsymptoticsError("tol below 1e-14 is not resolvable in doubles")
    cs = [1.0]
    residuals = [0.0]
    for _ in range(k_max - 1):
        prev = cs[-1]
        lo, hi = prev + 1e-9, prev + 4.0

        def g(c):
            return c * binary_entropy((c - prev) / c) - 1.0

        if g(lo) >= 0.0 or g(hi) <= 0.0:
            raise AsymptoticsError("bisection bracket failed (solver bug)")
        for _it in range(200):
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            if g(mid) < 0.0:
                lo = mid
            else:
                hi = mid
        root = 0.5 * (lo + hi)
        res = _step_residual(root, prev)
        if res >= tol:
            raise AsymptoticsError(f"residual {res} above tol {tol}")
        cs.append(root)
        residuals.append(res)
    return EntropyConstants(tuple(cs), tuple(residuals), tol)


# ---------------------------------------------------------------------------
# the strong rainbow-antichain upper bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundInputs:
    """Inputs for the RR*(P, A_k) bound; the mass supremum lambda*_max(P)
    has no general algorithm and must be supplied with its provenance."""

    k: int
    lambda_star_max: object        # float or Fraction
    e_star: int | None = None
    not_c1_c2: bool = False
    provenance: str = "user"

    def __post_init__(self):
        if self.e_star is not None and self.lambda_star_max < self.e_star:
            raise AsymptoticsError("lambda*_max must be >= e*(P)")


def min_middle_binomial_dim(k: int) -> int:
    """m_k = least m with C(m, floor(m/2)) >= k."""
    if k < 1:
        raise AsymptoticsError("k must be >= 1")
    m = 0
    while binom(m, m // 2) < k:
        m += 1
    return m


def rainbow_antichain_bound(inputs: BoundInputs) -> dict:
    """Upper bound floor((k-1) lambda*_max) + m_k for RR*(P, A_k), plus the
    sharper floor(2 lambda*_max) + 2 at k = 3 when P is neither C_1 nor C_2."""
    if inputs.k < 2:
        raise AsymptoticsError("rainbow_antichain_bound needs k >= 2")
    lam = inputs.lambda_star_max
    lam_frac = lam if isinstance(lam, Fraction) else Fraction(lam)
    m_k = min_middle_binomial_dim(inputs.k)
    out = {
        "k": inputs.k,
        "m_k": m_k,
        "bound": int(math.floor((inputs.k - 1) * lam_frac)) + m_k,
        "provenance": inputs.provenance,
    }
    if inputs.k == 3 and inputs.not_c1_c2:
        out["bound_sharp"] = int(math.floor(2 * lam_frac)) + 2
    return out


# ---------------------------------------------------------------------------
# grid checks of the closed-form inequalities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridReport:
    claim: str
    max_violation: float
    argmax: tuple
    points: int
    step: float


def _tech_value(check, alpha, beta):
    den = 1.0 - (alpha - beta)
    inv = 1.0 / den if den > 0.0 else math.inf  # alpha=1, beta=0 corner
    if check == "tech-a":
        return min(1.0 + beta + inv, 1.0 / alpha - 1.0 + beta)
    if check == "tech-b":
        return min(beta + inv - 1.0, 1.0 / alpha + 1.0 + beta)
    return min(beta + inv, 1.0 / alpha + beta)


def inequality_grid(check: str, grid_step: float = 1e-3) -> GridReport:
    """Evaluate one closed-form claim over its stated domain on a uniform
    grid and report the worst violation (which should be <= 1e-12 slack).

    tech-a: alpha <= 1/2; tech-b, tech-c: alpha >= 1/2; all with
    0 <= beta <= alpha <= 1 and target 1 + sqrt(2).  ineq1:
    beta(-beta^2 + (1 + 2 sqrt 2) beta - 2) <= 0 for beta in [0, 1/2].
    """
    if grid_step <= 0:
        raise AsymptoticsError("grid_step must be positive")
    worst = float("-inf")
    arg = ()
    points = 0
    if check == "ineq1":
        steps = int(round(0.5 / grid_step))
        for i in range(steps + 1):
            beta = min(i * grid_step, 0.5)
            val = beta * (-beta * beta + (1.0 + 2.0 * SQRT2) * beta - 2.0)
            points += 1
            if val > worst:
                worst = val
                arg = (beta,)
        return GridReport(check, worst, arg, points, grid_step)
    if check not in ("tech-a", "tech-b", "tech-c"):
        raise AsymptoticsError(f"unknown check {check!r}")
    target = 1.0 + SQRT2
    a_lo, a_hi = (grid_step, 0.5) if check == "tech-a" else (0.5, 1.0)
    steps_a = int(round((a_hi - a_lo) / grid_step))
    for i in range(steps_a + 1):
        alpha = min(a_lo + i * grid_step, a_hi)
        steps_b = int(alpha / grid_step)
        for j in range(steps_b + 1):
            beta = min(j * grid_step, alpha)
            val = _tech_value(check, alpha, beta) - target
            points += 1
            if val > worst:
                worst = val
                arg = (alpha, beta)
    return GridReport(check, worst, arg, points, grid_step)
