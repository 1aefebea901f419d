"""Finite poset patterns and copy search inside set families.

A weak copy of P in a family maps p < p' to nested sets; a strong
(induced) copy additionally keeps incomparable pairs incomparable.  A
thin copy uses at most one set per level, i.e. all image sizes differ.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .lattice import Family, are_comparable, is_subset


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class PosetPattern:
    """A finite poset given by its full order relation matrix."""

    size: int
    leq: tuple  # leq[i][j] True iff i <= j

    def __post_init__(self):
        k = self.size
        if len(self.leq) != k or any(len(row) != k for row in self.leq):
            raise PosetError("leq must be a size x size matrix")
        for i in range(k):
            if not self.leq[i][i]:
                raise PosetError("leq must be reflexive")
            for j in range(k):
                if i != j and self.leq[i][j] and self.leq[j][i]:
                    raise PosetError("leq must be antisymmetric")
                for l in range(k):
                    if self.leq[i][j] and self.leq[j][l] and not self.leq[i][l]:
                        raise PosetError("leq must be transitive")

    def less(self, i: int, j: int) -> bool:
        return i != j and self.leq[i][j]

    def comparable(self, i: int, j: int) -> bool:
        return self.leq[i][j] or self.leq[j][i]

    def is_chain(self) -> bool:
        return all(self.comparable(i, j) for i in range(self.size) for j in range(i))

    def is_antichain(self) -> bool:
        return not any(self.comparable(i, j) for i in range(self.size) for j in range(i))

    def linear_extension(self) -> tuple:
        """Deterministic linear extension: repeatedly pop the smallest-index minimal element."""
        remaining = list(range(self.size))
        order = []
        while remaining:
            for i in remaining:
                if not any(self.less(j, i) for j in remaining):
                    order.append(i)
                    remaining.remove(i)
                    break
        return tuple(order)

    def to_json(self) -> str:
        return json.dumps({"size": self.size, "leq": [[bool(v) for v in row] for row in self.leq]})

    @staticmethod
    def from_json(text: str) -> "PosetPattern":
        obj = json.loads(text)
        return PosetPattern(int(obj["size"]), tuple(tuple(bool(v) for v in row) for row in obj["leq"]))


def _pattern_from_strict(k: int, strict_pairs) -> PosetPattern:
    leq = [[i == j for j in range(k)] for i in range(k)]
    for (i, j) in strict_pairs:
        leq[i][j] = True
    # transitive closure
    changed = True
    while changed:
        changed = False
        for i in range(k):
            for j in range(k):
                if leq[i][j]:
                    for l in range(k):
                        if leq[j][l] and not leq[i][l]:
                            leq[i][l] = True
                            changed = True
    return PosetPattern(k, tuple(tuple(row) for row in leq))


def standard_poset(kind: str, param: int) -> PosetPattern:
    """Named patterns: chain C_l, antichain A_k, fork V_r, broom L_s, gen-diamond D_k.

    The fork V_r is one bottom below r incomparable tops; the broom L_s is
    s incomparable bottoms below one top; D_k is a < b_1..b_k < c.
    """
    if kind == "chain":
        if param < 1:
            raise PosetError("chain needs size >= 1")
        return _pattern_from_strict(param, ((i, j) for i in range(param) for j in range(i + 1, param)))
    if kind == "antichain":
        if param < 1:
            raise PosetError("antichain needs size >= 1")
        return _pattern_from_strict(param, ())
    if kind == "fork":
        if param < 2:
            raise PosetError("fork V_r needs r >= 2")
        return _pattern_from_strict(param + 1, ((0, i) for i in range(1, param + 1)))
    if kind == "broom":
        if param < 2:
            raise PosetError("broom L_s needs s >= 2")
        return _pattern_from_strict(param + 1, ((i, param) for i in range(param)))
    if kind == "gen-diamond":
        if param < 2:
            raise PosetError("generalized diamond D_k needs k >= 2")
        pairs = [(0, i) for i in range(1, param + 1)]
        pairs += [(i, param + 1) for i in range(1, param + 1)]
        return _pattern_from_strict(param + 2, pairs)
    raise PosetError(f"unknown standard poset kind {kind!r}")


_NAME_RE = re.compile(r"^([CAVLD])(\d+)$")
_NAME_KIND = {"C": "chain", "A": "antichain", "V": "fork", "L": "broom", "D": "gen-diamond"}


def poset_by_name(name: str) -> PosetPattern:
    """Parse names like C3, A4, V2, L3, D2."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise PosetError(f"cannot parse poset name {name!r}")
    return standard_poset(_NAME_KIND[m.group(1)], int(m.group(2)))


@dataclass(frozen=True)
class Embedding:
    """An injective copy of a pattern: images[p] is the set assigned to element p."""

    images: tuple
    mode: str
    thin: bool = False


# ---------------------------------------------------------------------------
# copy search
# ---------------------------------------------------------------------------

def _search_embedding(members, pattern: PosetPattern, mode: str, thin: bool,
                      color_of=None):
    """Backtracking search for a copy of pattern among members (canonical order).

    members must already be in canonical order for determinism.  When
    color_of is given, images must additionally carry pairwise distinct
    colors (the rainbow constraint).  Returns the image tuple or None.
    """
    strong = mode == "strong"
    k = pattern.size
    order = pattern.linear_extension()
    antichain = pattern.is_antichain()
    images = [None] * k
    used = set()
    used_colors = set()

    def place(t: int) -> bool:
        if t == k:
            return True
        p = order[t]
        lo_idx = 0
        if antichain and t > 0:
            # antichain elements are interchangeable: force increasing member index
            lo_idx = images_idx[order[t - 1]] + 1
        for idx in range(lo_idx, len(members)):
            cand = members[idx]
            if cand in used:
                continue
            if color_of is not None:
                c = color_of(cand)
                if c in used_colors:
                    continue
            ok = True
            for s in range(t):
                q = order[s]
                img = images[q]
                if pattern.less(q, p):
                    if not is_subset(img, cand) or img == cand:
                        ok = False
                        break
                elif pattern.less(p, q):
                    if not is_subset(cand, img) or img == cand:
                        ok = False
                        break
                elif strong and are_comparable(img, cand):
                    ok = False
                    break
                if thin and img.bit_count() == cand.bit_count():
                    ok = False
                    break
            if not ok:
                continue
            images[p] = cand
            images_idx[p] = idx
            used.add(cand)
            if color_of is not None:
                used_colors.add(color_of(cand))
            if place(t + 1):
                return True
            used.discard(cand)
            if color_of is not None:
                used_colors.discard(color_of(cand))
            images[p] = None
        return False

    images_idx = [0] * k
    if place(0):
        return tuple(images)
    return None


def find_copy(host: Family, pattern: PosetPattern, mode: str = "weak",
              thin: bool = False):
    """First weak/strong (optionally thin) copy of pattern in host, or None.

    Deterministic: pattern elements are processed in a fixed linear
    extension and candidates in the family's canonical order, so the
    returned witness is reproducible.
    """
    if mode not in ("weak", "strong"):
        raise PosetError(f"mode must be weak or strong, got {mode!r}")
    if pattern.size > len(host):
        return None
    images = _search_embedding(host.members, pattern, mode, thin)
    if images is None:
        return None
    return Embedding(images, mode, thin)


def find_copy_naive(host: Family, pattern: PosetPattern, mode: str = "weak",
                    thin: bool = False):
    """All-injections oracle for find_copy (tiny instances only)."""
    from itertools import permutations

    strong = mode == "strong"
    k = pattern.size
    for images in permutations(host.members, k):
        ok = True
        for i in range(k):
            for j in range(k):
                if i == j:
                    continue
                if pattern.less(i, j):
                    if not is_subset(images[i], images[j]) or images[i] == images[j]:
                        ok = False
                        break
                elif strong and not pattern.less(j, i):
                    if is_subset(images[i], images[j]) or is_subset(images[j], images[i]):
                        ok = False
                        break
            if not ok:
                break
        if ok and thin:
            sizes = [m.bit_count() for m in images]
            ok = len(set(sizes)) == k
        if ok:
            return Embedding(images, mode, thin)
    return None


# ---------------------------------------------------------------------------
# structural and extremal parameters
# ---------------------------------------------------------------------------

def structural_params(pattern: PosetPattern) -> dict:
    """Connectivity of the comparability graph and the extreme-element index f.

    f = 0 if the pattern has both a unique largest and a unique smallest
    element, f = 2 if it has neither, f = 1 otherwise.
    """
    k = pattern.size
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(k):
            if j not in seen and i != j and pattern.comparable(i, j):
                seen.add(j)
                stack.append(j)
    connected = len(seen) == k
    has_max = any(all(pattern.leq[j][i] for j in range(k)) for i in range(k))
    has_min = any(all(pattern.leq[i][j] for j in range(k)) for i in range(k))
    f = 0 if (has_max and has_min) else (2 if not (has_max or has_min) else 1)
    return {"connected": connected, "f": f}


@dataclass(frozen=True)
class PosetParams:
    """Search-derived parameters; None means the search cap was too small
    to pin the value (the truth is >= cap, never guessed)."""

    connected: bool
    f: int
    m_weak: int | None
    m_strong: int | None
    r_star: int | None
    e_estimate: int | None
    e_star_estimate: int | None
    n_cap: int
    provenance: dict = field(compare=False, default_factory=dict)


def _cube_families(n_cap):
    return [Family.whole_cube(n) for n in range(n_cap + 1)]


def _max_cube_without(cubes, pattern, mode, thin=False):
    """Largest m <= cap with no copy in B_m, or None if every B_m <= cap is copy-free.

    Copy existence is monotone in m (a subcube embedding preserves both
    relations and level structure), so the first hit settles the value.
    """
    for m, cube in enumerate(cubes):
        if find_copy(cube, pattern, mode, thin) is not None:
            return m - 1
    return None


def _level_window_estimate(pattern, mode, n_cap):
    """min over n <= cap of the largest m with all m consecutive levels of
    B_n pattern-free; cubes too small for any window to host the pattern
    constrain nothing.  None when no window up to the cap hosts a copy."""
    from .lattice import levels_family

    best = None
    for n in range(1, n_cap + 1):
        hit_m = None
        for m in range(1, n + 2):
            for lo in range(0, n - m + 2):
                fam = levels_family(n, lo, lo + m - 1)
                if find_copy(fam, pattern, mode) is not None:
                    hit_m = m
                    break
            if hit_m is not None:
                break
        if hit_m is not None:
            best = hit_m - 1 if best is None else min(best, hit_m - 1)
    return best


def extremal_params(pattern: PosetPattern, n_cap: int = 6,
                    e_known: int | None = None,
                    e_star_known: int | None = None) -> PosetParams:
    """Exhaustively computed m(P), m*(P), r*(P) up to n_cap, plus e-estimates.

    e_estimate / e_star_estimate are upper bounds on e(P), e*(P) from
    level windows of small cubes; they are exact (and flagged so) for
    chains, where e(C_l) = e*(C_l) = l - 1, and may be overridden by a
    caller-supplied known value.
    """
    if n_cap < 1 or n_cap > 7:
        raise PosetError("extremal_params supports 1 <= n_cap <= 7")
    cubes = _cube_families(n_cap)
    sp = structural_params(pattern)
    m_weak = _max_cube_without(cubes, pattern, "weak")
    m_strong = _max_cube_without(cubes, pattern, "strong")
    r_star = _max_cube_without(cubes, pattern, "strong", thin=True)
    prov = {}
    if pattern.is_chain():
        e_est = e_star_est = pattern.size - 1
        prov["e"] = prov["e_star"] = "wired: chain"
    else:
        if e_known is not None:
            e_est, prov["e"] = e_known, "user"
        else:
            e_est, prov["e"] = _level_window_estimate(pattern, "weak", n_cap), "estimate"
        if e_star_known is not None:
            e_star_est, prov["e_star"] = e_star_known, "user"
        else:
            e_star_est, prov["e_star"] = _level_window_estimate(pattern, "strong", n_cap), "estimate"
    return PosetParams(sp["connected"], sp["f"], m_weak, m_strong, r_star,
                       e_est, e_star_est, n_cap, prov)
