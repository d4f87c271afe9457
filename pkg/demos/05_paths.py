"""Lattice path families: counts and signed sums next to the determinants they match."""

from htdet import paths
from htdet.hessenberg import d_minus, d_plus
from htdet.paths import LatticePath
from htdet.sequences import fine, large_schroeder

print("Schroeder paths of length 2:", sorted(paths.words("P", 2)))
print("stats of uududd:", paths.stats("uududd"))

members = list(paths.enumerate_family("A", 2, check=True))
print(f"\nmarked family A_2 has {len(members)} members, e.g.:")
for m in members[:4]:
    print("  ", m)
print("parsed back:", LatticePath.parse(str(members[0])) == members[0])

S = [large_schroeder(i) for i in range(10)]
t = [fine(i) for i in range(12)]
print("\n n  signed A   D+(S_1..S_n)   |A|    D-(S_1..S_n)")
for n in range(1, 7):
    print(f"{n:2} {paths.family_signed_sum('A', n):>9} {d_plus(S[1:n + 1]):>12} "
          f"{paths.family_cardinality('A', n):>8} {d_minus(S[1:n + 1]):>10}")

print("\ntriples of long-unit Dyck paths, signed:",
      [paths.family_signed_sum("Ttuple", n) for n in range(1, 8)])
print("D+(t_4..t_(n+3)):                       ", [d_plus(t[4:n + 4]) for n in range(1, 8)])
print("Dyck paths of length 5 by returns:", [paths.dyck_return_count(5, j) for j in range(1, 6)])
