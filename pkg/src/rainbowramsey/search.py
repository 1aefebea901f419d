"""Exhaustive and structure-exploiting searches at desk scale.

Covers the k-color poset Ramsey numbers R, the rainbow Ramsey numbers RR
(arbitrary color counts via canonical set partitions), the rainbow
antichain thresholds F / F' (sizes) and G' (Lubell masses), and the
fork-Ramsey functions f_k(r), g_k(r).

Every finite value is exact: lower bounds carry an explicit avoiding
coloring, upper bounds an exhausted enumeration (method and node counts
in the result details).
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .lattice import all_masks, are_comparable, canonical_key, full_mask
from .lubell import binom, lubell_interval
from .colorings import Coloring, _rainbow_strong_antichain
from .posets import PosetPattern, standard_poset, _search_embedding


class SearchError(ValueError):
    pass


class BudgetExceeded(Exception):
    pass


@dataclass
class SearchResult:
    problem: str
    value: object            # int, Fraction, or ">n" when capped
    method: str
    witness: Coloring | None
    checked: tuple           # (n_min, n_max) actually decided
    budget_exhausted: bool = False
    details: dict = field(default_factory=dict)

    def to_jsonable(self):
        if isinstance(self.value, Fraction):
            value = f"{self.value.numerator}/{self.value.denominator}"
        else:
            value = self.value
        return {
            "problem": self.problem,
            "value": value,
            "method": self.method,
            "witness": None if self.witness is None else json.loads(self.witness.to_json()),
            "checked": {"n_min": self.checked[0], "n_max": self.checked[1]},
            "budget_exhausted": self.budget_exhausted,
        }


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit):
        self.nodes = 0
        self.limit = limit

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded


# ---------------------------------------------------------------------------
# ground-set permutation symmetry (checked at complete-level boundaries)
# ---------------------------------------------------------------------------

def _canonical_masks(n):
    return sorted(all_masks(n), key=canonical_key)


def _perm_mask(mask, perm):
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def _perm_position_maps(n, masks):
    """For each nonidentity permutation of the ground set, position t of the
    canonical order maps to the position of the permuted mask (levels are
    preserved, so boundaries at complete levels are permutation-stable)."""
    pos = {m: t for t, m in enumerate(masks)}
    maps = []
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        maps.append(tuple(pos[_perm_mask(m, perm)] for m in masks))
    return maps


def _level_boundaries(n, masks):
    ends = []
    for t in range(1, len(masks)):
        if masks[t].bit_count() != masks[t - 1].bit_count():
            ends.append(t)
    ends.append(len(masks))
    return set(ends)


def _rgs(seq):
    remap = {}
    out = []
    for c in seq:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return out


def _prefix_is_orbit_min(assign, t, perm_maps, rename):
    """True iff the length-t prefix is lexicographically minimal in its
    permutation orbit (colors renamed first-seen when rename is set)."""
    prefix = assign[:t]
    base = _rgs(prefix) if rename else prefix
    for pmap in perm_maps:
        other = [assign[pmap[i]] for i in range(t)]
        if rename:
            other = _rgs(other)
        if other < base:
            return False
    return True


# ---------------------------------------------------------------------------
# R(P_1, ..., P_k): k-color Ramsey numbers
# ---------------------------------------------------------------------------

def _ramsey_avoiding(n, patterns, mode, counter, symmetry):
    """An avoiding k-coloring of B_n (class i free of P_i) or None."""
    k = len(patterns)
    masks = _canonical_masks(n)
    total = len(masks)
    identical = all(p == patterns[0] for p in patterns)
    use_sym = symmetry and n >= 4
    perm_maps = _perm_position_maps(n, masks) if use_sym else []
    boundaries = _level_boundaries(n, masks) if use_sym else set()
    classes = [[] for _ in range(k)]
    assign = [0] * total

    def place(t):
        counter.tick()
        if t == total:
            return True
        if use_sym and t in boundaries and not _prefix_is_orbit_min(
                assign, t, perm_maps, identical):
            return False
        used = max(assign[:t], default=-1)
        cmax = min(k - 1, used + 1) if identical else k - 1
        for c in range(cmax + 1):
            classes[c].append(masks[t])
            assign[t] = c
            if _search_embedding(tuple(classes[c]), patterns[c], mode, False) is None:
                if place(t + 1):
                    return True
            classes[c].pop()
        return False

    if place(0):
        return Coloring(n, list(zip(masks, assign)), total=True)
    return None


def ramsey(patterns, mode: str = "weak", n_cap: int = 4,
           budget: int | None = 2_000_000, symmetry: bool = True) -> SearchResult:
    """Least n <= n_cap such that every k-coloring of B_n yields a
    monochromatic copy of P_i in some color class i."""
    names = ",".join(f"P{i}" for i in range(len(patterns)))
    problem = f"R({names}) {mode}"
    counter = _Counter(budget)
    witness = None
    last_done = -1
    try:
        for n in range(0, n_cap + 1):
            avoiding = _ramsey_avoiding(n, patterns, mode, counter, symmetry)
            if avoiding is None:
                return SearchResult(problem, n, "brute", witness, (0, n),
                                    details={"nodes": counter.nodes})
            witness = avoiding
            last_done = n
    except BudgetExceeded:
        return SearchResult(problem, f">{last_done}", "brute", witness,
                            (0, last_done), budget_exhausted=True,
                            details={"nodes": counter.nodes})
    return SearchResult(problem, f">{n_cap}", "brute", witness, (0, n_cap),
                        details={"nodes": counter.nodes})


# ---------------------------------------------------------------------------
# RR(P, Q): rainbow Ramsey via canonical set partitions
# ---------------------------------------------------------------------------

def iter_canonical_colorings(n):
    """All colorings of B_n up to color renaming, as restricted-growth
    sequences over the canonical mask order (one per renaming class)."""
    masks = _canonical_masks(n)
    total = len(masks)
    assign = [0] * total

    def rec(t, used):
        if t == total:
            yield tuple(assign)
            return
        for c in range(used + 1):
            assign[t] = c
            yield from rec(t + 1, max(used, c + 1))

    yield from rec(0, 0) if total else iter(())


def _rr_avoiding(n, p, q, mode, counter, symmetry):
    """A coloring of B_n with no monochromatic P and no rainbow Q, or None.

    Enumerates set partitions (restricted growth) with early pruning: a
    partial coloring already containing either pattern can never avoid.
    """
    masks = _canonical_masks(n)
    total = len(masks)
    use_sym = symmetry and n >= 4
    perm_maps = _perm_position_maps(n, masks) if use_sym else []
    boundaries = _level_boundaries(n, masks) if use_sym else set()
    assign = [0] * total
    classes = {}
    color_of = {}
    q_size = q.size
    q_antichain = q.is_antichain()

    def has_rainbow_q(newly_colored):
        colored = [m for m in masks[:newly_colored + 1]]
        if len(set(color_of.values())) < q_size:
            return False
        if q_antichain:
            if mode == "weak":
                return True  # q_size distinct colors suffice for a weak antichain copy
            return _rainbow_strong_antichain(tuple(colored), color_of.get, q_size) is not None
        return _search_embedding(tuple(colored), q, mode, False,
                                 color_of=color_of.get) is not None

    def place(t):
        counter.tick()
        if t == total:
            return True
        if use_sym and t in boundaries and not _prefix_is_orbit_min(
                assign, t, perm_maps, True):
            return False
        used = max(assign[:t], default=-1)
        for c in range(used + 2):
            cls = classes.setdefault(c, [])
            cls.append(masks[t])
            color_of[masks[t]] = c
            assign[t] = c
            ok_mono = _search_embedding(tuple(cls), p, mode, False) is None
            if ok_mono and not has_rainbow_q(t):
                if place(t + 1):
                    return True
            cls.pop()
            del color_of[masks[t]]
        return False

    if place(0):
        return Coloring(n, list(zip(masks, assign)), total=True)
    return None


def rainbow_ramsey(p: PosetPattern, q: PosetPattern, mode: str = "weak",
                   n_cap: int = 3, budget: int | None = 2_000_000,
                   symmetry: bool = True) -> SearchResult:
    """Least n <= n_cap such that every coloring of B_n (any number of
    colors) yields a monochromatic copy of P or a rainbow copy of Q."""
    problem = f"RR(P,Q) {mode}"
    counter = _Counter(budget)
    witness = None
    last_done = -1
    try:
        for n in range(0, n_cap + 1):
            avoiding = _rr_avoiding(n, p, q, mode, counter, symmetry)
            if avoiding is None:
                return SearchResult(problem, n, "canonical-partition", witness,
                                    (0, n), details={"nodes": counter.nodes})
            witness = avoiding
            last_done = n
    except BudgetExceeded:
        return SearchResult(problem, f">{last_done}", "canonical-partition",
                            witness, (0, last_done), budget_exhausted=True,
                            details={"nodes": counter.nodes})
    return SearchResult(problem, f">{n_cap}", "canonical-partition", witness,
                        (0, n_cap), details={"nodes": counter.nodes})


# ---------------------------------------------------------------------------
# F(n,k) and F'(n,k): size thresholds for rainbow strong antichains
# ---------------------------------------------------------------------------

def _comparability_bitsets(n):
    """comp[i] = bitset over mask values comparable (incl. equal) to i."""
    size = 1 << n
    comp = [0] * size
    for a in range(size):
        bits = 1 << a
        for b in range(a + 1, size):
            if are_comparable(a, b):
                bits |= 1 << b
                comp[b] |= 1 << a
        comp[a] |= bits
    return comp


def _bits_of(x):
    while x:
        bit = x & -x
        x ^= bit
        yield bit.bit_length() - 1


def _coloring_from_classes(n, class_masks, total=False):
    items = []
    for c, masks in enumerate(class_masks):
        items += [(m, c) for m in masks]
    return Coloring(n, items, total=total)


def _threshold2(n, partial):
    """Exact F(n,2) / F'(n,2) by sweeping all 2^(2^n) first classes.

    No rainbow strong A_2 means the two classes are mutually comparable,
    so for each class-1 choice the best class 2 is every remaining set
    comparable to all of class 1 (supersets of smaller class-2 choices
    only help: domination).
    """
    size = 1 << n
    comp = _comparability_bitsets(n)
    everything = (1 << size) - 1
    best = -1
    best_pair = (0, 0)
    for h1 in range(1 << size):
        allowed = everything
        rest = h1
        while rest:
            bit = rest & -rest
            rest ^= bit
            allowed &= comp[bit.bit_length() - 1]
        if partial:
            h2 = allowed & ~h1
        else:
            h2 = everything & ~h1
            if h2 & ~allowed:
                continue
        v = min(h1.bit_count(), h2.bit_count())
        if v > best:
            best = v
            best_pair = (h1, h2)
    witness = _coloring_from_classes(
        n, [list(_bits_of(best_pair[0])), list(_bits_of(best_pair[1]))],
        total=not partial)
    return best, witness


def _incomparable_triples(n):
    size = 1 << n
    trip = []
    for a in range(size):
        for b in range(a + 1, size):
            if are_comparable(a, b):
                continue
            for c in range(b + 1, size):
                if not are_comparable(a, c) and not are_comparable(b, c):
                    trip.append((a, b, c))
    return trip


def _threshold3(n, partial, counter):
    """Exact F(n,3) / F'(n,3) by branch and bound over all 3-colorings.

    Maximizes the minimum class size over colorings with no rainbow strong
    A_3 (no incomparable triple in three distinct colors); colors are
    interchangeable, so restricted growth breaks the renaming symmetry.
    """
    size = 1 << n
    masks = list(range(size))
    triples = _incomparable_triples(n)
    per_set = [[] for _ in range(size)]
    for tr in triples:
        for x in tr:
            per_set[x].append(tr)
    color = {}
    counts = [0, 0, 0]
    best = -1
    best_classes = None
    uncolored = -1 if partial else None

    def rainbow_through(x):
        cx = color[x]
        for (a, b, c) in per_set[x]:
            got = {color.get(a), color.get(b), color.get(c)}
            got.discard(None)
            got.discard(uncolored)
            if len(got) == 3:
                return True
        return False

    def place(t):
        nonlocal best, best_classes
        counter.tick()
        if t == size:
            v = min(counts)
            if v > best:
                best = v
                best_classes = [[m for m in masks if color.get(m) == c] for c in range(3)]
            return
        remaining = size - t
        # even giving every remaining set to the smallest class cannot help
        if min(counts) + remaining <= best:
            return
        used = 1 + max((color[m] for m in masks[:t] if color[m] in (0, 1, 2)),
                       default=-1)
        options = list(range(min(3, used + 1)))
        if partial:
            options.append(uncolored)
        for c in options:
            color[masks[t]] = c
            if c != uncolored:
                counts[c] += 1
            if c == uncolored or not rainbow_through(masks[t]):
                place(t + 1)
            if c != uncolored:
                counts[c] -= 1
            del color[masks[t]]

    place(0)
    witness = None
    if best_classes is not None:
        witness = _coloring_from_classes(n, best_classes, total=not partial)
    return best, witness


def threshold_F(n: int, k: int, partial: bool,
                budget: int | None = 50_000_000) -> SearchResult:
    """Exact F(n,k) (total colorings) or F'(n,k) (partial colorings):
    the least m such that minimum class size >= m forces a rainbow strong
    A_k.  Returns max-min + 1 with an extremal witness."""
    name = f"F'({n},{k})" if partial else f"F({n},{k})"
    if k == 2:
        if n > 4:
            raise SearchError("threshold_F with k=2 is capped at n=4; use two_color_partial_exact")
        v, witness = _threshold2(n, partial)
        return SearchResult(name, v + 1, "brute", witness, (n, n),
                            details={"max_min": v})
    if k == 3:
        if n > 4:
            raise SearchError("threshold_F with k=3 is capped at n=4")
        counter = _Counter(budget)
        try:
            v, witness = _threshold3(n, partial, counter)
        except BudgetExceeded:
            return SearchResult(name, None, "branch-bound", None, (n, n),
                                budget_exhausted=True,
                                details={"nodes": counter.nodes})
        return SearchResult(name, v + 1, "branch-bound", witness, (n, n),
                            details={"max_min": v, "nodes": counter.nodes})
    raise SearchError("threshold_F supports k in {2, 3}")


# ---------------------------------------------------------------------------
# F'(n,2) and G'(n,2) exactly, via the core-chain structure
# ---------------------------------------------------------------------------

def _balanced_min(b1, b2, points):
    """max over splits of min(b1 + p1, b2 + p2) with p1 + p2 = points."""
    lo, hi = min(b1, b2), max(b1, b2)
    if hi - lo >= points:
        return lo + points
    return (lo + hi + points) // 2


def _two_color_size(n):
    """Closed composition scan for F'(n,2) - 1 (largest balanced pair).

    Along a core chain only block dimensions matter; within one class a
    block split (x, y) -> x + y trades interior size 2^x + 2^y - 4 for
    2^(x+y) - 2 at the cost of one chain point, so per class a single
    block of dimension x plus unit glue blocks is optimal.  Scan all
    (x, y, glue) splits of n exactly.
    """
    best = -1
    best_cfg = None
    for x in range(n + 1):
        for y in range(n + 1 - x):
            s = n - x - y
            points = (1 if x else 0) + (1 if y else 0) + s + 1
            b1 = (1 << x) - 2 if x >= 1 else 0
            b2 = (1 << y) - 2 if y >= 1 else 0
            v = _balanced_min(b1, b2, points)
            if v > best:
                best = v
                best_cfg = (x, y, s)
    return best, best_cfg


def _size_witness(n, cfg, target):
    """Materialize a partial 2-coloring achieving min class size target."""
    x, y, s = cfg
    cuts = [0]
    if x:
        cuts.append(x)
    if y and x + y != cuts[-1]:
        cuts.append(x + y)
    for u in range(x + y + 1, n + 1):
        cuts.append(u)
    if cuts[-1] != n:
        cuts.append(n)
    points = [full_mask(c) for c in cuts]
    class_sets = ([], [])
    if x:
        for m in range(1 << n):
            if m not in (0, points[1]) and m & ~points[1] == 0:
                class_sets[0].append(m)
    if y:
        top = full_mask(x + y)
        for m in range(1 << n):
            if m not in (full_mask(x), top) and m & ~top == 0 and m & full_mask(x) == full_mask(x):
                class_sets[1].append(m)
    sizes = [len(class_sets[0]), len(class_sets[1])]
    for pm in points:
        c = 0 if sizes[0] <= sizes[1] else 1
        class_sets[c].append(pm)
        sizes[c] += 1
    assert min(sizes) >= target
    return _coloring_from_classes(n, class_sets)


def _two_color_pareto_dp(n, point_w, interior_w, seed_best):
    """Exact max-min over all core-chain colorings for additive weights.

    State: chain point level with a Pareto front of class weight pairs.
    Transitions append the next chain point, coloring the skipped open
    block (if its dimension is >= 2) and the new point; the empty set's
    point is pinned to class 0 (global color swap symmetry).  Dominance
    and the optimistic completion bound are exact, so the returned value
    is the true optimum; parent links reconstruct an extremal config.
    """
    zero = point_w(0) - point_w(0)
    # everything placeable above the level-l point sits strictly inside
    # B_{S_l, [n]}, whose weight is interior(l, n) plus the top point
    remaining = [interior_w(l, n) + point_w(n) for l in range(n)] + [zero]

    best = seed_best
    fronts = {0: {(point_w(0), zero): None}}
    parents = {(0, (point_w(0), zero)): None}
    for lvl in range(n):
        front = fronts.pop(lvl, None)
        if not front:
            continue
        items = sorted(front, key=lambda p: (-p[0], -p[1]))
        kept = []
        hi2 = None
        for pair in items:
            if hi2 is None or pair[1] > hi2:
                kept.append(pair)
                hi2 = pair[1]
        ub = remaining[lvl]
        for pair in kept:
            a, b = pair
            if min(a, b) + ub <= best or (a + b + ub) <= 2 * best:
                continue
            for nxt in range(lvl + 1, n + 1):
                dim = nxt - lvl
                blk = interior_w(lvl, nxt) if dim >= 2 else zero
                pw = point_w(nxt)
                block_opts = (0, 1) if dim >= 2 and blk != zero else (None,)
                for blk_to in block_opts:
                    for pt_to in (0, 1):
                        na = a + (blk if blk_to == 0 else zero) + (pw if pt_to == 0 else zero)
                        nb = b + (blk if blk_to == 1 else zero) + (pw if pt_to == 1 else zero)
                        ch = (na, nb)
                        tgt = fronts.setdefault(nxt, {})
                        if ch not in tgt:
                            tgt[ch] = None
                            parents[(nxt, ch)] = (lvl, pair, blk_to, pt_to)
                        if nxt == n and min(ch) > best:
                            best = min(ch)
    arg = None
    for pair in fronts.get(n, {}):
        if min(pair) == best and (arg is None or pair < arg):
            arg = pair
    config = None
    if arg is not None:
        steps = []
        cur = (n, arg)
        while parents[cur] is not None:
            lvl, pair, blk_to, pt_to = parents[cur]
            steps.append((cur[0], blk_to, pt_to))
            cur = (lvl, pair)
        steps.reverse()
        config = [(0, None, 0)] + steps  # (level, open-block owner, point owner)
    return best, config


def _seed_three_point(n, point_w, interior_w):
    """Exact value of every one- or two-block chain (0, s, n): a strong
    starting bound for the Pareto DP.  Returns (value, chain config)."""
    zero = point_w(0) - point_w(0)
    best = zero
    best_cfg = None
    for s in [None] + list(range(1, n)):
        if s is None:
            blocks, pts = [(0, n)], [0, n]
        else:
            blocks, pts = [(0, s), (s, n)], [0, s, n]
        block_ws = [interior_w(a, b) if b - a >= 2 else zero for (a, b) in blocks]
        for colors in range(1 << len(blocks)):
            base = [zero, zero]
            for i, w in enumerate(block_ws):
                base[(colors >> i) & 1] += w
            for pcolors in range(1 << len(pts)):
                tot = base[:]
                for i, l in enumerate(pts):
                    tot[(pcolors >> i) & 1] += point_w(l)
                v = min(tot)
                if v > best:
                    best = v
                    flip = (pcolors >> 0) & 1  # pin the empty set's point to class 0
                    owner = lambda bit: bit ^ flip
                    cfg = [(0, None, 0)]
                    for i, (a, b) in enumerate(blocks):
                        blk_to = owner((colors >> i) & 1) if b - a >= 2 else None
                        cfg.append((b, blk_to, owner((pcolors >> (i + 1)) & 1)))
                    best_cfg = cfg
    return best, best_cfg


def _chain_config_coloring(n, config):
    """Materialize the partial 2-coloring described by a DP chain config
    on the canonical nested ground sets {1..l}."""
    items = []
    prev = 0
    for (lvl, blk_to, pt_to) in config:
        mask = full_mask(lvl)
        items.append((mask, pt_to))
        if blk_to is not None:
            lo, hi = full_mask(prev), mask
            sub = hi & ~lo
            inner = sub
            while True:
                m = lo | inner
                if m != lo and m != hi:
                    items.append((m, blk_to))
                if inner == 0:
                    break
                inner = (inner - 1) & sub
        prev = lvl
    return Coloring(n, items)


def two_color_partial_exact(n: int, objective: str = "size") -> SearchResult:
    """Exact F'(n,2) (objective "size") or G'(n,2) (objective "mass").

    Partial 2-colorings avoid a rainbow strong A_2 exactly when the color
    classes are mutually comparable, hence live on a core chain; only the
    chain point levels matter, so an exact scan / Pareto DP over level
    compositions settles the extremal value.
    """
    if n < 1 or n > 40:
        raise SearchError("two_color_partial_exact supports 1 <= n <= 40")
    if objective == "size":
        v, cfg = _two_color_size(n)
        witness = _size_witness(n, cfg, v) if n <= 16 else None
        return SearchResult(f"F'({n},2)", v + 1, "composition-DP", witness,
                            (n, n), details={"max_min": v, "blocks": cfg})
    if objective == "mass":
        def point_w(l):
            return Fraction(1, binom(n, l))

        def interior_w(a, b):
            return lubell_interval(n, a, b) - point_w(a) - point_w(b)

        seed, seed_cfg = _seed_three_point(n, point_w, interior_w)
        v, cfg = _two_color_pareto_dp(n, point_w, interior_w, seed)
        if cfg is None:
            v, cfg = seed, seed_cfg
        witness = _chain_config_coloring(n, cfg) if n <= 16 else None
        return SearchResult(f"G'({n},2)", v, "composition-DP", witness, (n, n),
                            details={"max_min_mass": f"{v.numerator}/{v.denominator}",
                                     "chain_config": cfg})
    raise SearchError("objective must be size or mass")


def two_color_size_dp_oracle(n: int) -> int:
    """Pareto-DP recomputation of F'(n,2)-1 with size weights (cross-check
    for the closed composition scan)."""
    def point_w(l):
        return 1

    def interior_w(a, b):
        return (1 << (b - a)) - 2

    seed, _ = _seed_three_point(n, point_w, interior_w)
    v, _ = _two_color_pareto_dp(n, point_w, interior_w, seed)
    return max(v, seed)


# ---------------------------------------------------------------------------
# fork-Ramsey functions g_k(r) and f_k(r)
# ---------------------------------------------------------------------------

_CUM_CACHE = {}


def _cum_row(m):
    """cum[t] = sum_{j=1..t} C(m, j)."""
    row = _CUM_CACHE.get(m)
    if row is None:
        row = [0]
        for j in range(1, m + 1):
            row.append(row[-1] + binom(m, j))
        _CUM_CACHE[m] = row
    return row


def _max_block_len(n, lo, r):
    """Longest d with levels lo..lo+d-1 of B_n free of weak V_r: the bottom
    level's strict-superset count sum_{j=1..d-1} C(n-lo, j) stays < r."""
    row = _cum_row(n - lo)
    t = bisect_right(row, r - 1) - 1
    return min(t + 1, n + 1 - lo)


def fork_can_avoid(n: int, r: int, k: int) -> bool:
    """Does some consecutive-level k-coloring of B_n avoid a weak V_r?

    Greedy maximal blocks from the bottom are optimal: the longest V_r-free
    block starting at level lo is nondecreasing in lo, so any avoiding
    composition is dominated by the greedy one.
    """
    if k > n + 1:
        return False  # no composition of n+1 into k positive parts
    lo = 0
    for _ in range(k):
        lo += _max_block_len(n, lo, r)
        if lo >= n + 1:
            return True
    return False


def fork_g(r: int, k: int) -> int:
    """g_k(r): least n (with n >= k-1 so k-part colorings exist) such that
    every consecutive-level k-coloring of B_n has a monochromatic weak V_r."""
    if r < 1 or k < 1:
        raise SearchError("fork_g needs r >= 1 and k >= 1")
    n = k - 1
    while fork_can_avoid(n, r, k):
        n += 1
        if n > 64:
            raise SearchError("fork_g exceeded the n=64 ground cap")
    return n


def fork_g_sweep(r_max: int, k: int):
    """fork_g(r, k) for every r = 1..r_max, exact, using monotonicity in r
    (avoidance only gets easier as r grows) to avoid rescanning."""
    out = [0] * (r_max + 1)
    n = k - 1
    for r in range(1, r_max + 1):
        while fork_can_avoid(n, r, k):
            n += 1
        out[r] = n
    return out


def fork_f_small(r: int, k: int, n_cap: int = 4,
                 budget: int | None = 2_000_000) -> SearchResult:
    """f_k(r) = R_k(V_r) by brute force over all k-colorings (k <= 2)."""
    if k > 2:
        raise SearchError("fork_f_small is capped at k <= 2")
    pattern = standard_poset("chain", 2) if r == 1 else standard_poset("fork", r)
    res = ramsey([pattern] * k, "weak", n_cap, budget)
    res.problem = f"f_{k}({r})"
    return res


# ---------------------------------------------------------------------------
# independent fork oracle over explicit level blocks
# ---------------------------------------------------------------------------

_SUPSET_BITS = {}


def _superset_bitsets(n):
    """bitset over mask values of the strict supersets of each mask."""
    sups = _SUPSET_BITS.get(n)
    if sups is None:
        size = 1 << n
        sups = [0] * size
        for m in range(size - 1, -1, -1):
            acc = 0
            free = full_mask(n) & ~m
            while free:
                bit = free & -free
                free ^= bit
                child = m | bit
                acc |= (1 << child) | sups[child]
            sups[m] = acc
        if n <= 12:
            _SUPSET_BITS[n] = sups
    return sups


def fork_block_check_naive(n: int, lo: int, hi: int, r: int) -> bool:
    """Weak V_r inside levels lo..hi of B_n by explicit superset counting
    over the actual lattice (independent of any binomial formula)."""
    sups = _superset_bitsets(n)
    block = 0
    for m in all_masks(n):
        if lo <= m.bit_count() <= hi:
            block |= 1 << m
    for m in all_masks(n):
        if lo <= m.bit_count() < hi:
            if (sups[m] & block).bit_count() >= r:
                return True
    return False


def fork_can_avoid_naive(n: int, r: int, k: int) -> bool:
    """Per-composition oracle for fork_can_avoid."""
    if k > n + 1:
        return False

    def rec(lo, blocks_left):
        if lo == n + 1:
            return True
        if blocks_left == 0:
            return False
        for hi in range(lo, n + 1):
            if fork_block_check_naive(n, lo, hi, r):
                break
            if rec(hi + 1, blocks_left - 1):
                return True
        return False

    return rec(0, k)
