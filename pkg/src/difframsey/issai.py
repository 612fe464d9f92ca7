"""Schur tuples and Issai numbers.

A Schur k-tuple is ``(x_1, ..., x_k)`` with ``x_1 + ... + x_{k-1} = x_k``;
summands may repeat.  ``S(k_1, ..., k_r)`` is the least ``S`` such that every
r-coloring of ``1..S`` has a color-``i`` Schur ``k_i``-tuple for some ``i``.
It is computed with the same level-by-level scheme as the difference Ramsey
numbers: level ``n`` holds every tuple-free coloring of ``1..n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import (
    MAX_COLORS,
    MAX_VERTICES,
    CliqueTargets,
    ColoringError,
    DifferenceColoring,
    members_of,
)
from .search import EXACT, LOWER_BOUND, SearchBudgetError, SearchOptions, SearchOutcome, count_orbits

__all__ = [
    "IntegerColoring",
    "SchurWitness",
    "is_schur_tuple",
    "find_mono_schur_tuple",
    "creates_schur_tuple_with",
    "issai_search",
    "extract_schur_tuple",
    "lemma2_bound",
]


@dataclass(frozen=True)
class IntegerColoring:
    """Colors of the integers ``1..n``; ``assignment[x - 1]`` is the color of ``x``."""

    n: int
    r: int
    assignment: tuple[int, ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        assignment = tuple(self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if not 0 <= self.n <= MAX_VERTICES:
            raise ColoringError(f"range top {self.n} outside 0..{MAX_VERTICES}")
        if not 1 <= self.r <= MAX_COLORS:
            raise ColoringError(f"color count {self.r} outside 1..{MAX_COLORS}")
        if len(assignment) != self.n:
            raise ColoringError(f"expected {self.n} colored integers, got {len(assignment)}")
        masks = [0] * self.r
        for x, c in enumerate(assignment, start=1):
            if not 1 <= c <= self.r:
                raise ColoringError(f"integer {x} has color {c} outside 1..{self.r}")
            masks[c - 1] |= 1 << x
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_classes(cls, n: int, class_lists: Sequence[Iterable[int]]) -> "IntegerColoring":
        assignment: dict[int, int] = {}
        for c, members in enumerate(class_lists, start=1):
            for x in members:
                if not 1 <= x <= n:
                    raise ColoringError(f"integer {x} outside 1..{n}")
                if x in assignment:
                    raise ColoringError(f"integer {x} doubly colored (colors {assignment[x]} and {c})")
                assignment[x] = c
        for x in range(1, n + 1):
            if x not in assignment:
                raise ColoringError(f"integer {x} is not colored")
        return cls(n, len(class_lists), tuple(assignment[x] for x in range(1, n + 1)))

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int]) -> "IntegerColoring":
        assignment = [0] * n
        for c, mask in enumerate(masks, start=1):
            for x in members_of(mask):
                assignment[x - 1] = c
        return cls(n, len(masks), tuple(assignment))

    @classmethod
    def from_string(cls, text: str, r: int) -> "IntegerColoring":
        return cls(len(text), r, tuple(int(ch) for ch in text))

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(members_of(m) for m in self._masks)

    def color(self, x: int) -> int:
        return self.assignment[x - 1]

    def to_string(self) -> str:
        return "".join(map(str, self.assignment))


@dataclass(frozen=True)
class SchurWitness:
    entries: tuple[int, ...]
    color: int

    @property
    def k(self) -> int:
        return len(self.entries)


def is_schur_tuple(entries: Sequence[int], k: int) -> bool:
    if len(entries) != k or k < 2:
        return False
    return sum(entries[:-1]) == entries[-1]


def _first_tuple(members: Sequence[int], member_set: set[int], k: int) -> tuple[int, ...] | None:
    # Depth-first over nondecreasing summand sequences drawn from ``members``
    # (sorted), so the first hit is lexicographically smallest.
    top = members[-1] if members else 0
    chosen: list[int] = []

    def walk(start: int, need: int, total: int):
        if need == 0:
            return tuple(chosen) + (total,) if total in member_set else None
        for i in range(start, len(members)):
            x = members[i]
            if total + need * x > top:
                break
            chosen.append(x)
            hit = walk(i, need - 1, total + x)
            chosen.pop()
            if hit:
                return hit
        return None

    return walk(0, k - 1, 0)


def find_mono_schur_tuple(
    c: IntegerColoring,
    targets: CliqueTargets,
    colors: Iterable[int] | None = None,
) -> SchurWitness | None:
    """Lexicographically smallest monochromatic Schur ``k_i``-tuple in color ``i``.

    ``colors`` restricts the scan to some color indices.
    """
    if targets.r != c.r:
        raise ColoringError(f"coloring has {c.r} colors but {targets.r} targets were given")
    best: SchurWitness | None = None
    for color in (range(1, c.r + 1) if colors is None else colors):
        members = c.classes[color - 1]
        hit = _first_tuple(members, set(members), targets[color])
        if hit and (best is None or hit < best.entries):
            best = SchurWitness(hit, color)
    return best


def _sums_to(mask: int, total: int, parts: int) -> bool:
    # Reachable sums of exactly ``parts`` members (with repetition), as a bitmask.
    window = (1 << (total + 1)) - 1
    reach = 1
    for _ in range(parts):
        nxt = 0
        rest = mask
        while rest:
            low = rest & -rest
            nxt |= reach << (low.bit_length() - 1)
            rest ^= low
        reach = nxt & window
        if not reach:
            return False
    return bool(reach >> total & 1)


def creates_schur_tuple_with(members: int | Iterable[int], new_value: int, k: int) -> bool:
    """Whether coloring ``new_value`` like ``members`` creates a Schur k-tuple.

    ``new_value`` must exceed every member.  Any new tuple then has
    ``new_value`` as its sum, because a summand is strictly smaller than the sum.
    """
    mask = members if isinstance(members, int) else sum(1 << x for x in set(members))
    if mask.bit_length() - 1 >= new_value:
        raise ColoringError(f"new value {new_value} must exceed every member")
    return _sums_to(mask, new_value, k - 1)


def issai_search(targets: CliqueTargets, options: SearchOptions | None = None) -> SearchOutcome:
    """Compute ``S(targets)`` by extending tuple-free colorings one integer at a time."""
    options = options or SearchOptions()
    sizes = targets.sizes
    r = targets.r
    level: list[tuple[int, ...]] = [(0,) * r]
    n = 0
    capped = False
    while True:
        if n + 1 >= MAX_VERTICES:
            raise ColoringError(
                f"S({targets.label()}) exceeds the supported range 1..{MAX_VERTICES - 1}"
            )
        x = n + 1
        bit = 1 << x
        child = []
        for row in level:
            for c in range(r):
                if not _sums_to(row[c], x, sizes[c] - 1):
                    child.append(row[:c] + (row[c] | bit,) + row[c + 1:])
        if not child:
            break
        if options.beam_cap is not None:
            if len(child) > options.beam_cap:
                del child[options.beam_cap:]
                capped = True
        elif len(child) > options.max_level_size:
            raise SearchBudgetError(
                f"Issai level {x} for ({targets.label()}) holds {len(child)} colorings; "
                f"rerun with a beam cap"
            )
        level = child
        n = x

    colorings = tuple(IntegerColoring.from_masks(n, row) for row in level)
    return SearchOutcome(
        targets=targets,
        status=LOWER_BOUND if capped else EXACT,
        value=n + 1,
        maximal_colorings=colorings,
        orbit_count=None if capped else count_orbits(colorings, targets),
        kind="issai",
    )


def extract_schur_tuple(c: DifferenceColoring, clique_vertices: Sequence[int]) -> SchurWitness:
    """Read a monochromatic Schur tuple off a monochromatic clique.

    With ``v_0 < ... < v_{k-1}`` and ``d_i = v_i - v_0``, the consecutive gaps
    ``d_1, d_2 - d_1, ...`` sum to ``d_{k-1}`` and are all edge colors of the
    clique.
    """
    vs = sorted(clique_vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ColoringError(f"need at least 3 distinct vertices, got {list(clique_vertices)}")
    if vs[0] < 1 or vs[-1] > c.n:
        raise ColoringError(f"vertices must lie in 1..{c.n}")
    color = c.color(vs[1] - vs[0])
    for u, v in itertools.combinations(vs, 2):
        if c.color(v - u) != color:
            raise ColoringError(
                f"vertices {list(vs)} are not a monochromatic clique: "
                f"edge ({u},{v}) has color {c.color(v - u)}, expected {color}"
            )
    gaps = sorted(b - a for a, b in zip(vs, vs[1:]))
    return SchurWitness(tuple(gaps) + (vs[-1] - vs[0],), color)


def lemma2_bound(ramsey: SearchOutcome, issai: SearchOutcome) -> bool:
    """Check ``S(targets) <= D(targets) - 1`` for a pair of exact outcomes."""
    if ramsey.targets != issai.targets:
        raise ValueError("outcomes are for different targets")
    if not (ramsey.exact and issai.exact):
        raise ValueError("both outcomes must be exact")
    return issai.value <= ramsey.value - 1
