"""Trudi's formula: the same determinant as a sum over partitions or compositions."""

import time

from htdet.hessenberg import det_prefixes
from htdet.sequences import fine
from htdet.trudi import compositions_of, partitions_of, trudi_composition_sum, trudi_partition_sum

print("partitions of 5 as multiplicity vectors:")
for p in partitions_of(5):
    print("  ", p.v, "parts:", p.size)
print("compositions of 4:", list(compositions_of(4)))

t = [fine(i) for i in range(1, 19)]
dets = det_prefixes(1, t)
for n in (6, 12, 18):
    t0 = time.perf_counter()
    via_partitions = trudi_partition_sum(1, t[:n])
    t1 = time.perf_counter()
    line = f"n={n:2}  det={dets[n - 1]:>8}  partitions={via_partitions:>8} ({t1 - t0:.3f}s)"
    if n <= 12:
        via_comps = trudi_composition_sum(1, t[:n])
        line += f"  compositions={via_comps:>8} ({time.perf_counter() - t1:.3f}s)"
    print(line)
