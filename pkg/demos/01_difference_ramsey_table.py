"""
Difference Ramsey numbers, small table
======================================

Each value D(k, l) is found by growing every clique-avoiding difference
coloring one difference at a time until none survive.
"""

import time

from difframsey import CliqueTargets, search

# two-color targets, plus the three-color (3,3,3)
targets = [(3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9),
           (4, 4), (4, 5), (4, 6), (3, 3, 3), (3, 3, 4)]

for sizes in targets:
    t0 = time.perf_counter()
    outcome = search(CliqueTargets(sizes))
    print(f"{outcome.summary():28s} maximal graphs: {outcome.orbit_count:3d}"
          f"  ({len(outcome.maximal_colorings)} before color symmetry, "
          f"{time.perf_counter() - t0:.2f}s)")

# the maximal graphs for (3,5): blue differences avoid triangles, red avoid K_5
for c in search(CliqueTargets((3, 5))).maximal_colorings:
    print(c.to_string(), "blue =", c.classes[0])
