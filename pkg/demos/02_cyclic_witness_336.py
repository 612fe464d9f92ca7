"""
A 59-vertex coloring avoiding (3,3,6)
=====================================

The coloring is cyclic, so only differences up to 29 are listed; d and 59-d
share a color.  Checking it both with the difference-set clique test and on
the explicit 59-vertex graph shows R(3,3,6) >= 60.
"""

from pathlib import Path

from difframsey import CliqueTargets, parse_coloring_file, render_report, verify_coloring
from difframsey.search import LOWER_BOUND, SearchOutcome

path = Path(__file__).parents[1] / "tests" / "data" / "d336_cyclic59.txt"
cf = parse_coloring_file(path.read_text())
print(f"n={cf.n}, colors={cf.r}, cyclic={cf.cyclic}")
for color, members in enumerate(cf.coloring.classes, start=1):
    print(f"color {color}: {len(members)} differences")

result = verify_coloring(cf.coloring, CliqueTargets((3, 3, 6)))
print("\n".join(result.lines()))

# the same check as a write-up; a verified coloring on n vertices gives D >= n + 1
outcome = SearchOutcome(CliqueTargets((3, 3, 6)), LOWER_BOUND, cf.n + 1, (cf.coloring,))
print(render_report(outcome))
