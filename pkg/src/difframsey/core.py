"""Difference colorings and clique tests.

A difference coloring on ``n`` vertices assigns a color to each difference
``1..n-1``; the edge ``{i, j}`` of the complete graph then takes the color of
``|j - i|``.  Color classes are stored as integer bitmasks (bit ``d`` set iff
difference ``d`` belongs to the class), which keeps membership and the
clique recursion down to a handful of shifts and ands.

Colors are 1-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = [
    "MAX_VERTICES",
    "MAX_COLORS",
    "ColoringError",
    "CliqueTargets",
    "DifferenceColoring",
    "DifferenceSet",
    "CyclicColoring",
    "ExplicitGraph",
    "make_difference_coloring",
    "expand_cyclic",
    "find_clique",
    "has_clique",
    "creates_clique_with",
    "clique_vertices",
    "materialize",
    "oracle_find_mono_clique",
    "oracle_has_mono_clique",
    "mask_of",
    "members_of",
    "mirror_mask",
]

#: Largest vertex count accepted anywhere in the package.
MAX_VERTICES = 128
#: Colors are written as single digits in assignment strings.
MAX_COLORS = 9

# Mirrored masks keep bit (_MIRROR - d) for difference d, so that
# ``mirror >> (_MIRROR - j)`` has bit j - d set for every d < j.
_MIRROR = MAX_VERTICES


class ColoringError(ValueError):
    """Raised for malformed colorings, targets or clique queries."""


def mask_of(members: Iterable[int]) -> int:
    mask = 0
    for d in members:
        mask |= 1 << d
    return mask


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mirror_mask(mask: int) -> int:
    """Return the mask with bit ``MAX_VERTICES - d`` set for each member ``d``."""
    out = 0
    for d in members_of(mask):
        out |= 1 << (_MIRROR - d)
    return out


@dataclass(frozen=True)
class CliqueTargets:
    """Forbidden monochromatic clique sizes, one per color."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(k) for k in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes:
            raise ColoringError("at least one clique size is required")
        if len(sizes) > MAX_COLORS:
            raise ColoringError(f"at most {MAX_COLORS} colors are supported, got {len(sizes)}")
        for k in sizes:
            if k < 3:
                raise ColoringError(f"clique sizes must be at least 3, got {k}")

    @classmethod
    def parse(cls, text: str) -> "CliqueTargets":
        try:
            return cls(tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok))
        except ValueError as exc:
            if isinstance(exc, ColoringError):
                raise
            raise ColoringError(f"bad targets {text!r}: expected k1,k2,...") from None

    @property
    def r(self) -> int:
        return len(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __getitem__(self, color: int) -> int:
        """Clique size for a 1-based color index."""
        return self.sizes[color - 1]

    def label(self) -> str:
        return ",".join(map(str, self.sizes))


@dataclass(frozen=True)
class DifferenceSet:
    """One color class: a set of differences within ``1..max_diff``."""

    mask: int
    max_diff: int

    def __post_init__(self):
        if self.max_diff < 0 or self.max_diff >= MAX_VERTICES:
            raise ColoringError(f"max_diff {self.max_diff} outside 0..{MAX_VERTICES - 1}")
        if self.mask < 0 or self.mask & 1 or self.mask >> (self.max_diff + 1):
            bad = [d for d in members_of(abs(self.mask)) if d < 1 or d > self.max_diff]
            raise ColoringError(f"difference {bad[0] if bad else 0} outside 1..{self.max_diff}")

    @classmethod
    def of(cls, members: Iterable[int], max_diff: int | None = None) -> "DifferenceSet":
        members = list(members)
        for d in members:
            if d < 1 or d >= MAX_VERTICES:
                raise ColoringError(f"difference {d} outside 1..{MAX_VERTICES - 1}")
        if max_diff is None:
            max_diff = max(members, default=0)
        return cls(mask_of(members), max_diff)

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    def __contains__(self, d: int) -> bool:
        return d >= 0 and bool(self.mask >> d & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class DifferenceColoring:
    """Colors of the differences ``1..n-1``; ``assignment[d - 1]`` is the color of ``d``."""

    n: int
    r: int
    assignment: tuple[int, ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        assignment = tuple(self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if not 1 <= self.n <= MAX_VERTICES:
            raise ColoringError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if not 1 <= self.r <= MAX_COLORS:
            raise ColoringError(f"color count {self.r} outside 1..{MAX_COLORS}")
        if len(assignment) != self.n - 1:
            raise ColoringError(
                f"{self.n} vertices need {self.n - 1} colored differences, got {len(assignment)}"
            )
        masks = [0] * self.r
        for d, c in enumerate(assignment, start=1):
            if not 1 <= c <= self.r:
                raise ColoringError(f"difference {d} has color {c} outside 1..{self.r}")
            masks[c - 1] |= 1 << d
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int]) -> "DifferenceColoring":
        assignment = [0] * (n - 1)
        for c, mask in enumerate(masks, start=1):
            for d in members_of(mask):
                assignment[d - 1] = c
        return cls(n, len(masks), tuple(assignment))

    @classmethod
    def from_string(cls, text: str, r: int) -> "DifferenceColoring":
        return cls(len(text) + 1, r, tuple(int(ch) for ch in text))

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(members_of(m) for m in self._masks)

    def color(self, d: int) -> int:
        return self.assignment[d - 1]

    def color_class(self, color: int) -> DifferenceSet:
        return DifferenceSet(self._masks[color - 1], self.n - 1)

    def to_string(self) -> str:
        return "".join(map(str, self.assignment))

    def is_cyclic(self) -> bool:
        return all(self.color(d) == self.color(self.n - d) for d in range(1, self.n))


@dataclass(frozen=True)
class CyclicColoring:
    """A coloring given by ``half_assignment`` on ``1..n//2``, mirrored by ``d -> n - d``."""

    n: int
    half_assignment: Mapping[int, int]
    r: int | None = None


@dataclass(frozen=True)
class ExplicitGraph:
    """Edge-colored complete graph on vertices ``1..n``; keys are pairs ``(i, j)`` with ``i < j``."""

    n: int
    edge_colors: Mapping[tuple[int, int], int]

    def color(self, u: int, v: int) -> int:
        return self.edge_colors[(u, v) if u < v else (v, u)]


def make_difference_coloring(n: int, class_lists: Sequence[Iterable[int]]) -> DifferenceColoring:
    """Build a coloring from one difference list per color (color 1 first)."""
    if not class_lists:
        raise ColoringError("at least one color class is required")
    if not 1 <= n <= MAX_VERTICES:
        raise ColoringError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    assignment: dict[int, int] = {}
    for c, members in enumerate(class_lists, start=1):
        for d in members:
            if not 1 <= d <= n - 1:
                raise ColoringError(f"difference {d} outside 1..{n - 1}")
            if d in assignment:
                raise ColoringError(
                    f"difference {d} doubly colored (colors {assignment[d]} and {c})"
                )
            assignment[d] = c
    for d in range(1, n):
        if d not in assignment:
            raise ColoringError(f"difference {d} is not colored")
    return DifferenceColoring(n, len(class_lists), tuple(assignment[d] for d in range(1, n)))


def expand_cyclic(c: CyclicColoring) -> DifferenceColoring:
    half = dict(c.half_assignment)
    top = c.n // 2
    for d in sorted(half):
        if not 1 <= d <= top:
            raise ColoringError(f"difference {d} outside cyclic half-range 1..{top}")
    for d in range(1, top + 1):
        if d not in half:
            raise ColoringError(f"difference {d} is not colored")
    r = c.r if c.r is not None else max(half.values(), default=1)
    assignment = tuple(half[min(d, c.n - d)] for d in range(1, c.n))
    return DifferenceColoring(c.n, r, assignment)


def _clique_search(cand: int, mask: int, need: int, chosen: list[int]) -> bool:
    # Extend ``chosen`` by ``need`` elements of ``cand``, each new element y
    # satisfying y - x in mask for every chosen x.  Candidates are visited in
    # increasing order, so the first hit is the lexicographically smallest.
    if need == 0:
        return True
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        x = low.bit_length() - 1
        cand ^= low
        chosen.append(x)
        if _clique_search(cand & (mask << x), mask, need - 1, chosen):
            return True
        chosen.pop()
    return False


def find_clique(d_set: DifferenceSet, k: int) -> tuple[int, ...] | None:
    """Smallest (k-1)-subset of ``d_set`` closed under pairwise differences, if any.

    Such a subset ``K`` exists exactly when the class contains a ``K_k``: the
    vertices ``1`` and ``1 + d`` for ``d`` in ``K`` form the clique.
    """
    if k < 2:
        raise ColoringError(f"clique size must be at least 2, got {k}")
    chosen: list[int] = []
    if _clique_search(d_set.mask, d_set.mask, k - 1, chosen):
        return tuple(chosen)
    return None


def has_clique(d_set: DifferenceSet, k: int) -> bool:
    return find_clique(d_set, k) is not None


def clique_vertices(witness: Sequence[int]) -> tuple[int, ...]:
    """Vertex labels of the clique certified by a ``find_clique`` witness."""
    return (1,) + tuple(1 + d for d in witness)


def _closes_clique(mask: int, mirror: int, j: int, k: int) -> bool:
    # Elements x with j - x also in the class are the only ones that can sit
    # next to j in a witness; among them we need a (k-2)-subset whose
    # pairwise differences lie in the class.
    cand = mask & (mirror >> (_MIRROR - j))
    return _clique_search(cand, mask, k - 2, [])


def creates_clique_with(d_set: DifferenceSet, new_diff: int, k: int) -> bool:
    """Whether adding ``new_diff`` (larger than every member) creates a ``K_k``.

    Assumes ``d_set`` itself is ``K_k``-free.  Since ``new_diff`` is the maximum
    it can only enter a witness as a member, never as a pairwise difference.
    """
    if k < 2:
        raise ColoringError(f"clique size must be at least 2, got {k}")
    top = d_set.mask.bit_length() - 1
    if new_diff <= max(top, 0):
        raise ColoringError(f"new difference {new_diff} must exceed every member (max {top})")
    if new_diff >= MAX_VERTICES:
        raise ColoringError(f"difference {new_diff} outside 1..{MAX_VERTICES - 1}")
    if k == 2:
        return True
    return _closes_clique(d_set.mask, mirror_mask(d_set.mask), new_diff, k)


def materialize(c: DifferenceColoring) -> ExplicitGraph:
    edges = {}
    for i in range(1, c.n + 1):
        for j in range(i + 1, c.n + 1):
            edges[(i, j)] = c.assignment[j - i - 1]
    return ExplicitGraph(c.n, edges)


def oracle_find_mono_clique(g: ExplicitGraph, k: int, color: int) -> tuple[int, ...] | None:
    """Vertex subset of size ``k`` with every edge in ``color``, by plain enumeration.

    Knows nothing about differences: it walks vertex subsets in increasing
    order and prunes a branch once a non-``color`` edge appears.
    """
    if k < 2:
        raise ColoringError(f"clique size must be at least 2, got {k}")
    vertices = range(1, g.n + 1)
    nbrs = {
        v: {u for u in vertices if u > v and g.color(v, u) == color} for v in vertices
    }

    def extend(chosen: list[int], pool: set[int]):
        if len(chosen) == k:
            return tuple(chosen)
        for v in sorted(pool):
            found = extend(chosen + [v], pool & nbrs[v])
            if found:
                return found
        return None

    return extend([], set(vertices))


def oracle_has_mono_clique(g: ExplicitGraph, k: int, color: int) -> bool:
    return oracle_find_mono_clique(g, k, color) is not None


def brute_force_mono_clique(g: ExplicitGraph, k: int, color: int) -> bool:
    """Unpruned ``itertools.combinations`` scan; only viable for tiny graphs."""
    return any(
        all(g.color(u, v) == color for u, v in itertools.combinations(sub, 2))
        for sub in itertools.combinations(range(1, g.n + 1), k)
    )
