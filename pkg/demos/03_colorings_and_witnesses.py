#!/usr/bin/env python3
"""Every explicit coloring construction, checked by the pattern searchers
that certify lower-bound witnesses.
"""

from rainbowramsey.lattice import set_repr
from rainbowramsey.lubell import lubell_mass
from rainbowramsey.posets import poset_by_name, standard_poset
from rainbowramsey.colorings import (
    f2_lower_coloring,
    find_pattern,
    fk_class_size_bound,
    fk_random_coloring,
    fk_structural_ok,
    g2_lower_coloring,
    level_coloring,
    rr_lower_coloring,
    thin_antichain,
    trace_coloring,
    validate_witness,
)

C2, C3, A3 = (poset_by_name(s) for s in ("C2", "C3", "A3"))

print("=" * 70)
print("Level-interval colorings and the rainbow Ramsey lower bound")
print("=" * 70)
col = rr_lower_coloring(e=1, q=3, f_tweak=0)
v = validate_witness(col, C2, C3, "weak", "weak")
print(f"intervals of e(C2)=1 levels on B_1 with |C3|-1 = 2 colors: avoided={v.avoided}")
print("  -> certifies RR(C2,C3) > 1, matching RR(C2,C3) = e(C2)(|C3|-1) = 2")

print()
print("trace colorings phi(F) = |F cap R| miss connected patterns entirely:")
col = trace_coloring(2, 0b01)
v = validate_witness(col, poset_by_name("V2"), A3, "weak", "weak")
print(f"  B_2, R = {{1}}: no mono weak V2, no rainbow weak A3: avoided={v.avoided}")

print()
print("=" * 70)
print("The level coloring and thin antichains")
print("=" * 70)
for k in (4, 6, 8):
    col = level_coloring(k + 1)
    v = validate_witness(col, C2, standard_poset("antichain", k), "strong", "strong")
    print(f"level coloring of B_{k+1}: avoids mono strong C2 and rainbow strong A_{k}: {v.avoided}")
print("  -> RR*(C2, A_k) >= k+2, strictly beating the e*(P)(|Q|-1)+f(Q) bound")

fam = thin_antichain(10)
print(f"\nconstructed thin antichain in B_10 (size {len(fam)}, no 9-set):")
print(f"  {[set_repr(m) for m in fam]}")

print()
print("=" * 70)
print("Mass-extremal and size-extremal two-colorings")
print("=" * 70)
for n in (5, 6):
    col = f2_lower_coloring(n)
    print(f"f2-lower(B_{n}): class sizes {col.class_sizes()}, "
          f"rainbow strong A2: {find_pattern(col, poset_by_name('A2'), 'strong', 'rainbow')}")
col = g2_lower_coloring(12)
masses = [lubell_mass(col.class_family(c)) for c in range(2)]
print(f"g2-lower(B_12): class masses {masses[0]} and {masses[1]} "
      f"(= {float(masses[0]):.4f}, {float(masses[1]):.4f}; limit 1+sqrt2 = 2.4142)")

print()
print("=" * 70)
print("The seeded randomized construction for many colors")
print("=" * 70)
col, meta = fk_random_coloring(14, 3, seed=7)
print(f"n=14, k=3: centers {[set_repr(f) for f in meta.centers]}")
print(f"  structural certificate: {fk_structural_ok(col, meta)}")
print(f"  class sizes {col.class_sizes()}, guaranteed bound {fk_class_size_bound(meta)}")
hit = find_pattern(fk_random_coloring(8, 3, seed=7)[0], A3, "strong", "rainbow")
print(f"  exhaustive rainbow strong A3 search at n=8: {hit}")
