"""Boolean lattice B_n over bitmasks: regions, families, maximal-chain counts.

A subset of [n] = {1, ..., n} is a machine integer whose bit i-1 is set
iff element i is in the subset.  Ground sizes are capped at 63 so subset
tests stay single-word.  Chain counts are exact Python integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

MAX_GROUND = 63


class LatticeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# bitmask set words
# ---------------------------------------------------------------------------

def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def are_comparable(a: int, b: int) -> bool:
    return a & ~b == 0 or b & ~a == 0


def mask_from_elements(elems, n: int) -> int:
    """Elements are 1-based, per the usual [n] convention."""
    m = 0
    for e in elems:
        if not 1 <= e <= n:
            raise LatticeError(f"element {e} outside ground [{n}]")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int):
    """1-based elements of a mask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def set_repr(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"


def all_masks(n: int):
    return range(1 << n)


def submasks(mask: int):
    """All subsets of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def supermasks(mask: int, n: int):
    """All supersets of mask inside [n]."""
    free = full_mask(n) & ~mask
    for extra in submasks(free):
        yield mask | extra


def _check_ground(n: int):
    if not 0 <= n <= MAX_GROUND:
        raise LatticeError(f"ground size {n} outside [0, {MAX_GROUND}]")


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def canonical_key(mask: int):
    """Level order: by set size, then by mask value."""
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class Family:
    """A deduplicated family of subsets of [n], members in level order."""

    ground: int
    members: tuple

    @staticmethod
    def make(ground: int, masks) -> "Family":
        _check_ground(ground)
        full = full_mask(ground)
        uniq = set(masks)
        for m in uniq:
            if m & ~full:
                raise LatticeError(f"mask {m:#x} has bits outside ground [{ground}]")
        return Family(ground, tuple(sorted(uniq, key=canonical_key)))

    @staticmethod
    def whole_cube(n: int) -> "Family":
        return Family.make(n, all_masks(n))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return mask in set(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)

    # --- FAM v1 text format and JSON -------------------------------------

    def to_text(self) -> str:
        lines = [f"n={self.ground}"]
        for m in self.members:
            lines.append("{}" if m == 0 else ",".join(str(e) for e in elements_of(m)))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "Family":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("n="):
            raise LatticeError("FAM v1: first line must be n=<ground>")
        n = int(lines[0][2:])
        masks = []
        for ln in lines[1:]:
            if ln == "{}":
                masks.append(0)
            else:
                masks.append(mask_from_elements((int(tok) for tok in ln.split(",")), n))
        return Family.make(n, masks)

    def to_json(self) -> str:
        return json.dumps({"n": self.ground, "sets": list(self.members)})

    @staticmethod
    def from_json(text: str) -> "Family":
        obj = json.loads(text)
        return Family.make(int(obj["n"]), (int(m) for m in obj["sets"]))


# ---------------------------------------------------------------------------
# regions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegionSpec:
    """A named region of B_n.

    kind is one of "full", "level", "subcube", "upset", "downset",
    "interval-union".  Parameters: level wants ell; subcube wants (f, h);
    upset/downset want f; interval-union wants intervals=((f, h), ...).
    truncated drops the unique minimum and maximum of the region and is
    only legal for kinds that have them.
    """

    kind: str
    ell: int = 0
    f: int = 0
    h: int = 0
    intervals: tuple = ()
    truncated: bool = False


def region(spec: RegionSpec, n: int) -> Family:
    """Materialize a region of B_n as a Family."""
    _check_ground(n)
    full = full_mask(n)
    kind = spec.kind
    if kind == "full":
        masks = set(all_masks(n))
        extremes = (0, full)
    elif kind == "level":
        if not 0 <= spec.ell <= n:
            raise LatticeError(f"level {spec.ell} outside 0..{n}")
        masks = {m for m in all_masks(n) if m.bit_count() == spec.ell}
        extremes = None
    elif kind == "subcube":
        if spec.f & ~full or spec.h & ~full or not is_subset(spec.f, spec.h):
            raise LatticeError("subcube needs F <= H inside the ground set")
        masks = {spec.f | extra for extra in submasks(spec.h & ~spec.f)}
        extremes = (spec.f, spec.h)
    elif kind == "upset":
        if spec.f & ~full:
            raise LatticeError("upset base outside ground")
        masks = set(supermasks(spec.f, n))
        extremes = (spec.f, full)
    elif kind == "downset":
        if spec.f & ~full:
            raise LatticeError("downset base outside ground")
        masks = set(submasks(spec.f))
        extremes = (0, spec.f)
    elif kind == "interval-union":
        masks = set()
        for (f, h) in spec.intervals:
            if f & ~full or h & ~full or not is_subset(f, h):
                raise LatticeError("interval-union needs F <= H per interval")
            masks.update(f | extra for extra in submasks(h & ~f))
        extremes = None
    else:
        raise LatticeError(f"unknown region kind {kind!r}")

    if spec.truncated:
        if extremes is None:
            raise LatticeError(f"region kind {kind!r} has no unique min and max to truncate")
        masks.discard(extremes[0])
        masks.discard(extremes[1])
    return Family.make(n, masks)


def levels_family(n: int, lo: int, hi: int) -> Family:
    """Union of the consecutive levels lo..hi of B_n."""
    return Family.make(n, (m for m in all_masks(n) if lo <= m.bit_count() <= hi))


# ---------------------------------------------------------------------------
# max-partition of maximal chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MaxPartition:
    """Chain counts keyed by the largest family member met on the chain."""

    ground: int
    blocks: dict = field(compare=False)
    leftover: int = 0

    def total(self) -> int:
        return sum(self.blocks.values()) + self.leftover


_ENUM_LIMIT = 10
_DP_LIMIT = 20
_chain_cache: dict = {}


def _descending_chains(n: int):
    """All n! maximal chains of B_n, each as masks from [n] down to 0."""
    if n in _chain_cache:
        return _chain_cache[n]
    full = full_mask(n)
    chains = []
    for perm in permutations(range(n)):
        masks = [full]
        cur = full
        for i in perm:
            cur &= ~(1 << i)
            masks.append(cur)
        chains.append(tuple(masks))
    chains = tuple(chains)
    if n <= 8:
        _chain_cache[n] = chains
    return chains


def _max_partition_enumerate(fam: Family) -> MaxPartition:
    n = fam.ground
    members = fam.member_set()
    blocks = {m: 0 for m in fam.members}
    leftover = 0
    for chain in _descending_chains(n):
        for mask in chain:
            if mask in members:
                blocks[mask] += 1
                break
        else:
            leftover += 1
    return MaxPartition(n, blocks, leftover)


def _chains_up_avoiding(start: int, n: int, avoid: frozenset) -> int:
    """Number of saturated chains start -> [n] whose sets above start all miss avoid."""
    full = full_mask(n)
    memo = {}

    def rec(g):
        if g == full:
            return 1
        got = memo.get(g)
        if got is not None:
            return got
        total = 0
        free = full & ~g
        while free:
            bit = free & -free
            free ^= bit
            nxt = g | bit
            if nxt not in avoid:
                total += rec(nxt)
        memo[g] = total
        return total

    return rec(start)


def _max_partition_dp(fam: Family) -> MaxPartition:
    n = fam.ground
    members = fam.member_set()
    blocks = {}
    for f in fam.members:
        avoid = frozenset(members - {f})
        up = _chains_up_avoiding(f, n, avoid)
        blocks[f] = up * factorial(f.bit_count())
    leftover = factorial(n) - sum(blocks.values())
    return MaxPartition(n, blocks, leftover)


def max_partition(fam: Family, mode: str = "auto") -> MaxPartition:
    """Partition the n! maximal chains of B_n by their largest member of fam.

    blocks[F] counts chains whose largest set of fam is F; leftover counts
    chains disjoint from fam.  mode "enumerate" walks all n! chains
    (n <= 10), mode "dp" counts ascending chains per member (n <= 20);
    both are exact and agree.
    """
    n = fam.ground
    if mode == "auto":
        mode = "enumerate" if n <= 7 else "dp"
    if mode == "enumerate":
        if n > _ENUM_LIMIT:
            raise LatticeError(f"enumeration mode capped at n={_ENUM_LIMIT}, got {n}")
        return _max_partition_enumerate(fam)
    if mode == "dp":
        if n > _DP_LIMIT:
            raise LatticeError(f"dp mode capped at n={_DP_LIMIT}, got {n}")
        return _max_partition_dp(fam)
    raise LatticeError(f"unknown max_partition mode {mode!r}")


def random_family(n: int, rng, density: float = 0.3) -> Family:
    """Seeded random family: each subset of [n] kept with the given density."""
    return Family.make(n, (m for m in all_masks(n) if rng.random() < density))
