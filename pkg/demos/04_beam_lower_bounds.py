"""
Capped searches and checkpoints
===============================

When levels grow too large the search can keep only the lexicographically
smallest colorings of each level.  The result is then only a lower bound,
but it is reproducible run to run.
"""

import tempfile
from pathlib import Path

from difframsey import CliqueTargets, SearchOptions, checkpoint_read, search

targets = CliqueTargets((3, 3, 5))
for cap in (10, 100, 1000):
    outcome = search(targets, SearchOptions(beam_cap=cap))
    print(f"beam {cap:5d}: {outcome.summary()}")

# write every level to disk, then resume from the last one
with tempfile.TemporaryDirectory() as tmp:
    ck = Path(tmp) / "levels.txt"
    first = search(CliqueTargets((4, 5)), SearchOptions(checkpoint_path=ck))
    level = checkpoint_read(ck)
    print(ck.read_text().splitlines()[:3])
    print(search(CliqueTargets((4, 5)), resume=level) == first)
