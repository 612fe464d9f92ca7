"""Level-by-level enumeration of clique-avoiding difference colorings.

Level ``j`` holds every coloring of the differences ``1..j-1`` (a difference
graph on ``j`` vertices) with no color-``i`` clique of size ``k_i``.  Level
``j + 1`` is obtained by giving difference ``j`` each color in turn and keeping
the children that close no clique.  The search stops at the first empty
level; the previous one holds the maximal graphs and its vertex count plus one
is the difference Ramsey number.

Levels are kept in lexicographic order of their assignment strings.  Children
are produced parent by parent and color by color, so a sorted parent level
yields a sorted child level without any re-sorting, and beam truncation is
simply a prefix.
"""

from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .core import (
    MAX_VERTICES,
    CliqueTargets,
    ColoringError,
    DifferenceColoring,
    _MIRROR,
    _closes_clique,
    mirror_mask,
)

__all__ = [
    "EXACT",
    "LOWER_BOUND",
    "SearchBudgetError",
    "CheckpointError",
    "SearchOptions",
    "SearchLevel",
    "SearchOutcome",
    "initial_level",
    "extend_level",
    "search",
    "count_orbits",
    "admissible_permutations",
    "checkpoint_write",
    "checkpoint_read",
    "checkpoint_dumps",
    "checkpoint_loads",
]

log = logging.getLogger(__name__)

EXACT = "exact"
LOWER_BOUND = "lower_bound"

# Levels smaller than this are extended in-process even when workers exist.
_PARALLEL_MIN_ROWS = 2


class SearchBudgetError(MemoryError):
    """A level outgrew ``max_level_size`` and no beam cap was given."""


class CheckpointError(ValueError):
    pass


@dataclass(frozen=True)
class SearchOptions:
    beam_cap: int | None = None
    checkpoint_path: str | os.PathLike | None = None
    parallelism: int = 1
    max_level_size: int = 5_000_000

    def __post_init__(self):
        if self.beam_cap is not None and self.beam_cap < 1:
            raise ValueError(f"beam_cap must be at least 1, got {self.beam_cap}")
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be at least 1, got {self.parallelism}")
        if self.max_level_size < 1:
            raise ValueError(f"max_level_size must be at least 1, got {self.max_level_size}")


@dataclass(frozen=True)
class SearchLevel:
    """All surviving colorings on ``j`` vertices, as per-color difference masks.

    ``capped`` records that this level, or one of its ancestors, was truncated
    by a beam cap, so it no longer holds every surviving coloring.
    """

    targets: CliqueTargets
    j: int
    rows: tuple[tuple[int, ...], ...]
    capped: bool = False
    _mirrors: tuple[tuple[int, ...], ...] | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self):
        if self._mirrors is None:
            mirrors = tuple(tuple(mirror_mask(m) for m in row) for row in self.rows)
            object.__setattr__(self, "_mirrors", mirrors)

    def __len__(self):
        return len(self.rows)

    @property
    def colorings(self) -> tuple[DifferenceColoring, ...]:
        return tuple(DifferenceColoring.from_masks(self.j, row) for row in self.rows)

    def strings(self) -> list[str]:
        return [c.to_string() for c in self.colorings]


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a Ramsey (``kind="ramsey"``) or Issai (``kind="issai"``) search.

    For an exact result ``value`` is the number itself; for a lower bound it is
    one more than the size of the largest coloring found.  ``orbit_count`` is
    only set for exact results.
    """

    targets: CliqueTargets
    status: str
    value: int
    maximal_colorings: tuple
    orbit_count: int | None = None
    kind: str = "ramsey"

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    @property
    def symbol(self) -> str:
        return "D" if self.kind == "ramsey" else "S"

    def summary(self) -> str:
        name = f"{self.symbol}({self.targets.label()})"
        if self.exact:
            return f"{name} = {self.value} (exact)"
        return f"{name} >= {self.value} (capped)"


def initial_level(targets: CliqueTargets) -> SearchLevel:
    """Every coloring of the differences ``1..m-2`` where ``m`` is the smallest target.

    Graphs on ``m - 1`` vertices cannot contain any forbidden clique.
    """
    m = min(targets.sizes)
    r = targets.r
    rows = []
    for word in itertools.product(range(r), repeat=m - 2):
        masks = [0] * r
        for d, c in enumerate(word, start=1):
            masks[c] |= 1 << d
        rows.append(tuple(masks))
    return SearchLevel(targets, m - 1, tuple(rows))


def _extend_rows(rows, mirrors, j: int, sizes: Sequence[int]):
    bit = 1 << j
    mbit = 1 << (_MIRROR - j)
    out_rows = []
    out_mirrors = []
    for row, mir in zip(rows, mirrors):
        for c, k in enumerate(sizes):
            mask = row[c]
            if _closes_clique(mask, mir[c], j, k):
                continue
            out_rows.append(row[:c] + (mask | bit,) + row[c + 1:])
            out_mirrors.append(mir[:c] + (mir[c] | mbit,) + mir[c + 1:])
    return out_rows, out_mirrors


def _chunks(n: int, parts: int) -> list[slice]:
    step = -(-n // parts)
    return [slice(i, min(i + step, n)) for i in range(0, n, step)]


def extend_level(
    level: SearchLevel,
    targets: CliqueTargets,
    options: SearchOptions | None = None,
    *,
    executor: Executor | None = None,
) -> SearchLevel:
    """Color difference ``level.j`` every possible way and keep the survivors.

    With ``options.parallelism > 1`` the level is split into contiguous chunks
    extended by worker processes; the chunks are concatenated in order, so the
    result does not depend on the worker count.
    """
    options = options or SearchOptions()
    j = level.j
    if j >= MAX_VERTICES:
        raise ColoringError(f"cannot extend past {MAX_VERTICES} vertices")
    sizes = targets.sizes
    workers = options.parallelism
    if workers > 1 and len(level.rows) >= _PARALLEL_MIN_ROWS:
        own = executor is None
        pool = executor or ProcessPoolExecutor(workers)
        try:
            parts = _chunks(len(level.rows), workers)
            futures = [
                pool.submit(_extend_rows, level.rows[s], level._mirrors[s], j, sizes)
                for s in parts
            ]
            rows, mirrors = [], []
            for fut in futures:
                r_part, m_part = fut.result()
                rows.extend(r_part)
                mirrors.extend(m_part)
        finally:
            if own:
                pool.shutdown()
    else:
        rows, mirrors = _extend_rows(level.rows, level._mirrors, j, sizes)

    capped = level.capped
    if options.beam_cap is not None:
        if len(rows) > options.beam_cap:
            del rows[options.beam_cap:]
            del mirrors[options.beam_cap:]
            capped = True
    elif len(rows) > options.max_level_size:
        raise SearchBudgetError(
            f"level {j + 1} for targets ({targets.label()}) holds {len(rows)} colorings, "
            f"over the budget of {options.max_level_size}; rerun with a beam cap "
            f"to obtain a lower bound"
        )
    return SearchLevel(targets, j + 1, tuple(rows), capped, tuple(mirrors))


def admissible_permutations(targets: CliqueTargets) -> list[tuple[int, ...]]:
    """Color permutations (as 0-based tuples) that preserve the target sizes."""
    sizes = targets.sizes
    return [
        p
        for p in itertools.permutations(range(len(sizes)))
        if all(sizes[p[i]] == sizes[i] for i in range(len(sizes)))
    ]


def count_orbits(colorings: Iterable, targets: CliqueTargets) -> int:
    """Number of colorings up to target-preserving color permutations.

    Works on anything with an ``assignment`` of 1-based colors.
    """
    perms = admissible_permutations(targets)
    seen = set()
    for c in colorings:
        seen.add(min(tuple(p[a - 1] for a in c.assignment) for p in perms))
    return len(seen)


def search(
    targets: CliqueTargets,
    options: SearchOptions | None = None,
    *,
    resume: SearchLevel | None = None,
) -> SearchOutcome:
    """Compute D(targets), or a lower bound for it when a beam cap bites."""
    options = options or SearchOptions()
    level = resume if resume is not None else initial_level(targets)
    if level.targets != targets:
        raise ValueError(
            f"resume level is for targets ({level.targets.label()}), not ({targets.label()})"
        )
    if not level.rows:
        raise ValueError("cannot resume from an empty level")
    pool = ProcessPoolExecutor(options.parallelism) if options.parallelism > 1 else None
    out_of_range = False
    try:
        while True:
            if level.j >= MAX_VERTICES:
                out_of_range = True
                break
            child = extend_level(level, targets, options, executor=pool)
            log.debug("targets %s: level %d has %d colorings", targets.label(), child.j, len(child))
            if not child.rows:
                break
            level = child
            if options.checkpoint_path is not None:
                checkpoint_write(level, options.checkpoint_path)
    finally:
        if pool is not None:
            pool.shutdown()

    colorings = level.colorings
    exact = not level.capped and not out_of_range
    return SearchOutcome(
        targets=targets,
        status=EXACT if exact else LOWER_BOUND,
        value=level.j + 1,
        maximal_colorings=colorings,
        orbit_count=count_orbits(colorings, targets) if exact else None,
        kind="ramsey",
    )


def checkpoint_dumps(level: SearchLevel) -> str:
    lines = [f"targets={level.targets.label()}", f"j={level.j}"]
    if level.capped:
        lines.append("capped=1")
    lines.extend(level.strings())
    return "\n".join(lines) + "\n"


def checkpoint_write(level: SearchLevel, path) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(checkpoint_dumps(level))
    os.replace(tmp, path)


def checkpoint_loads(text: str) -> SearchLevel:
    lines = text.splitlines()

    def header(lineno: int, key: str) -> str:
        if lineno > len(lines):
            raise CheckpointError(f"line {lineno}: missing '{key}=' header")
        line = lines[lineno - 1].strip()
        if not line.startswith(key + "="):
            raise CheckpointError(f"line {lineno}: expected '{key}=', got {line!r}")
        return line[len(key) + 1:]

    try:
        targets = CliqueTargets.parse(header(1, "targets"))
    except ColoringError as exc:
        raise CheckpointError(f"line 1: {exc}") from None
    try:
        j = int(header(2, "j"))
    except ValueError:
        raise CheckpointError(f"line 2: vertex count is not an integer") from None
    if not 1 <= j <= MAX_VERTICES:
        raise CheckpointError(f"line 2: vertex count {j} outside 1..{MAX_VERTICES}")

    start = 3
    capped = False
    if len(lines) >= 3 and lines[2].strip().startswith("capped="):
        flag = lines[2].strip()[len("capped="):]
        if flag not in ("0", "1"):
            raise CheckpointError(f"line 3: capped must be 0 or 1, got {flag!r}")
        capped = flag == "1"
        start = 4

    r = targets.r
    digits = set("123456789"[:r])
    rows = []
    previous = None
    for lineno, raw in enumerate(lines[start - 1:], start=start):
        word = raw.strip()
        if not word:
            continue
        if len(word) != j - 1 or not set(word) <= digits:
            raise CheckpointError(
                f"line {lineno}: expected {j - 1} colors from 1..{r}, got {word!r}"
            )
        if previous is not None and word <= previous:
            raise CheckpointError(f"line {lineno}: colorings out of canonical order")
        previous = word
        masks = [0] * r
        for d, ch in enumerate(word, start=1):
            masks[int(ch) - 1] |= 1 << d
        rows.append(tuple(masks))
    return SearchLevel(targets, j, tuple(rows), capped)


def checkpoint_read(path) -> SearchLevel:
    return checkpoint_loads(Path(path).read_text())
