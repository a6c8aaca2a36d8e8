#!/usr/bin/env python3
# Builds the cyclotomic system for (p, q, m, n) = (3, 5, 1, 1) and walks
# through its pieces: the system constants, the classes for each modulus
# shape, the H-sets, and the exact partition of Z_30.

from collections import defaultdict

from cycloseq.cyclotomy import (bucket_of_label, build_system, h_set,
                                residue_side_of_2)

system = build_system(3, 5, 1, 1)
c = system.constants
print(f"p={c.p} q={c.q} m={c.m} n={c.n}: period {system.period}")
print(f"common primitive root g = {c.g}, mixing unit y = {c.y} "
      f"(g1 = {c.g1}, g2 = {c.g2})")

print("\nclasses by (shape, i, j, h):")
for cid, members in sorted(system.classes.items()):
    print(f"  {cid.shape:>3} i={cid.i} j={cid.j} h={cid.h}: "
          f"{[int(t) for t in members]}")

print("\nH-sets scale each class by its cofactor; doubled labels also by 2:")
for cid in system.labels[2:6]:
    print(f"  {cid}: {[int(t) for t in h_set(system, cid)]}")

buckets = defaultdict(list)
for t in range(system.period):
    buckets[bucket_of_label(system.labels[int(system.partition[t])])].append(t)
print("\npartition of Z_30 into symbol buckets:")
for name in ("zero", "half", "a", "b", "c", "d"):
    print(f"  {name:>4}: {buckets[name]}")

print("\nwhich coset holds 2 (0 = the subgroup <g^2, y>):")
for shape in ("p", "q", "pq"):
    print(f"  {shape:>2}-family: side {residue_side_of_2(system, shape)}")
