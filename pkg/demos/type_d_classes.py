#!/usr/bin/env python3
"""Class splitting in type D and the twisted coset.

G(2,2,n) is the Weyl group of type D_n.  A conjugacy class of the ambient
hyperoctahedral group with all parts of its first partition even (and
nothing in the second) splits into two classes of D_n; the invariant
vector (f_j) distinguishes the two halves.  The q = 1 coset carries the
character theory of the non-split twisted form; its class count always
matches its count of twist-stable characters.
"""

from greenrefl import (
    GroupParams,
    brute_force_oracle,
    coset_char_table,
    enumerate_char_params,
    enumerate_class_params,
    z_coset,
)

for n in (2, 3, 4):
    for q in (0, 1):
        params = GroupParams(2, 2, n, q)
        chars = enumerate_char_params(params)
        classes = enumerate_class_params(params)
        print(f"D_{n} coset q={q}: {len(chars)} characters, {len(classes)} classes")
        split = [xi for xi in classes if xi.b == 1]
        if q == 0:
            print("  split classes:", [xi.label() for xi in split] or "none")

params = GroupParams(2, 2, 3, 1)
group, report = brute_force_oracle(params)
print()
print(f"brute force on the q=1 coset of D_3: {report.coset_orbit_counts[1]} orbits")
for xi in enumerate_class_params(params):
    zc = z_coset(xi, params)
    print(f"  {xi.label():<12} centralizer {zc.centralizer:>3}   series {zc.value}")

table = coset_char_table(GroupParams(2, 2, 2, 1))
print()
print("twisted character table of the q=1 coset of D_2:")
print(table.matrix().pretty())
