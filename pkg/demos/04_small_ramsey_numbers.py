#!/usr/bin/env python3
"""Exact small Ramsey and rainbow Ramsey numbers, with their certificates.

Each finite value comes with an extremal avoiding coloring one level
below and an exhausted search at the value itself.
"""

from rainbowramsey.posets import find_copy, poset_by_name
from rainbowramsey.colorings import validate_witness
from rainbowramsey.search import rainbow_ramsey, ramsey

C2, C3, V2, A3 = (poset_by_name(s) for s in ("C2", "C3", "V2", "A3"))

print("=" * 70)
print("k-color Ramsey numbers R(P_1, ..., P_k)")
print("=" * 70)
for pats, label in (([C2], "R_1(C2)"), ([C2, C2], "R_2(C2)"), ([C3, C3], "R_2(C3)")):
    res = ramsey(pats, "weak", n_cap=4)
    w = res.witness
    print(f"{label} = {res.value}   ({res.details['nodes']} nodes; "
          f"extremal witness on B_{w.ground} with {w.num_colors} colors)")
    for c in range(w.num_colors):
        assert find_copy(w.class_family(c), pats[c], "weak") is None

print()
print("=" * 70)
print("rainbow Ramsey numbers RR(P, Q) over all colorings")
print("=" * 70)
for p, q, label in ((C2, C2, "RR(C2,C2)"), (C2, C3, "RR(C2,C3)"), (C2, V2, "RR(C2,V2)"),
                    (C3, V2, "RR(C3,V2)")):
    res = rainbow_ramsey(p, q, "weak", n_cap=4)
    print(f"{label} = {res.value}   (canonical partitions, {res.details['nodes']} nodes)")

print()
print("RR(P, V_r) = R_r(P): forks only need one extra color class to appear")
print(f"  RR(C3,V2) == R_2(C3): {rainbow_ramsey(C3, V2, 'weak', 4).value == ramsey([C3, C3], 'weak', 4).value}")

print()
print("=" * 70)
print("RR(P,Q) >= R_{|Q|-1}(P): too few colors cannot make Q rainbow")
print("=" * 70)
candidates = []
for p, q in ((C2, C3), (C3, C3), (C3, A3), (C2, A3)):
    r = ramsey([p] * (q.size - 1), "weak", n_cap=4)
    w = r.witness
    v = validate_witness(w, p, q, "weak", "weak")
    print(f"R_{q.size - 1}(P) witness at B_{w.ground} reused for RR: avoided={v.avoided}")
    rr = rainbow_ramsey(p, q, "weak", n_cap=3)
    if isinstance(rr.value, int) and isinstance(r.value, int) and rr.value > r.value:
        candidates.append((p, q, rr.value, r.value))
print(f"strict-inequality candidates found at this scale: {candidates or 'none'}")
print("(whether RR(P,Q) > R_{|Q|-1}(P) can ever be strict is open; we only report)")
