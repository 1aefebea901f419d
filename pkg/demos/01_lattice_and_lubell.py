#!/usr/bin/env python3
"""Walk through the lattice layer: regions, exact Lubell masses, and the
max-partition identity that powers the whole mass calculus.

Every number printed here is an exact rational or an exact big integer.
"""

import random
from fractions import Fraction

from rainbowramsey.lattice import Family, RegionSpec, max_partition, random_family, region, set_repr
from rainbowramsey.lubell import (
    lubell_mass,
    lubell_subcube,
    lubell_subcube_direct,
    maxpart_identity_residual,
)

print("=" * 70)
print("Regions of B_n")
print("=" * 70)

cube = region(RegionSpec("full"), 3)
print(f"B_3 has {len(cube)} subsets: {[set_repr(m) for m in cube]}")

trunc = region(RegionSpec("subcube", f=0b001, h=0b111, truncated=True), 3)
print(f"open subcube between {{1}} and {{1,2,3}}: {[set_repr(m) for m in trunc]}")

down = region(RegionSpec("downset", f=0b0011), 4)
print(f"downset of {{1,2}} in B_4: {[set_repr(m) for m in down]}")

print()
print("=" * 70)
print("Lubell mass: the expected number of family members on a random chain")
print("=" * 70)

print(f"mass of all of B_5          = {lubell_mass(Family.whole_cube(5))}   (always n+1)")
level2 = Family.make(5, (m for m in range(32) if bin(m).count('1') == 2))
print(f"mass of one full level      = {lubell_mass(level2)}")
print(f"mass of {{empty set, [5]}}    = {lubell_mass(Family.make(5, [0, 31]))}")

print()
print("The subcube closed form (n+1)/(a+b+1) * 1/C(a+b,a) against direct sums:")
for (n, a, b) in ((4, 1, 1), (9, 2, 3), (12, 0, 5)):
    closed = lubell_subcube(n, a, b)
    direct = lubell_subcube_direct(n, a, b)
    print(f"  n={n:2d} a={a} b={b}: closed {closed} == direct {direct}: {closed == direct}")

print()
print("=" * 70)
print("Max-partition of the n! maximal chains by largest family member")
print("=" * 70)

fam = Family.make(3, [0b001, 0b011])
mp = max_partition(fam)
print(f"family {{ {', '.join(set_repr(m) for m in fam)} }} in B_3:")
for f, cnt in mp.blocks.items():
    print(f"  chains whose largest member is {set_repr(f)}: {cnt}")
print(f"  chains missing the family entirely: {mp.leftover}  (total {mp.total()} = 3!)")

print()
print("The mass identity: lambda_n(F) = sum_F |C_nF|/n! * lambda_|F|(D_F cap F)")
rng = random.Random(2024)
for trial in range(5):
    n = rng.randint(3, 7)
    fam = random_family(n, rng, density=0.35)
    res = maxpart_identity_residual(fam)
    print(f"  random family in B_{n} ({len(fam):3d} sets): residual = {res}")
    assert res == Fraction(0)
print("residual is exactly zero, every time; no tolerance involved")
