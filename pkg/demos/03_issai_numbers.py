"""
Issai numbers
=============

S(k, l) is the least S such that every red/blue coloring of 1..S has a red
Schur k-tuple or a blue Schur l-tuple.  Summands may repeat, so 1+1=2 counts.
"""

from difframsey import CliqueTargets, IntegerColoring, find_mono_schur_tuple, issai_search, search

for sizes in [(3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (4, 4), (4, 5), (5, 5), (3, 3, 3)]:
    outcome = issai_search(CliqueTargets(sizes))
    reds = [c.classes[0] for c in outcome.maximal_colorings]
    print(f"{outcome.summary():22s} red classes at n={outcome.value - 1}: {reds[:3]}")

# diagonal values follow k^2 - k - 1
print([issai_search(CliqueTargets((k, k))).value for k in (3, 4, 5)])

# S never exceeds D - 1
for sizes in [(3, 3), (3, 4), (4, 4), (3, 3, 3)]:
    t = CliqueTargets(sizes)
    print(sizes, issai_search(t).value, "<=", search(t).value - 1)

# a red Schur 4-tuple without any red Schur triple
c = IntegerColoring.from_classes(9, [(1, 3, 5, 9), (2, 4, 6, 7, 8)])
print(find_mono_schur_tuple(c, CliqueTargets((4, 6)), colors=[1]),
      find_mono_schur_tuple(c, CliqueTargets((3, 6)), colors=[1]))
