import itertools

import pytest

from difframsey.core import (
    CliqueTargets,
    DifferenceColoring,
    has_clique,
    make_difference_coloring,
    materialize,
    oracle_has_mono_clique,
)
from difframsey.search import (
    EXACT,
    LOWER_BOUND,
    CheckpointError,
    SearchBudgetError,
    SearchLevel,
    SearchOptions,
    checkpoint_dumps,
    checkpoint_loads,
    checkpoint_read,
    checkpoint_write,
    count_orbits,
    extend_level,
    initial_level,
    search,
)

T33 = CliqueTargets((3, 3))


def avoids(c: DifferenceColoring, targets) -> bool:
    g = materialize(c)
    return not any(oracle_has_mono_clique(g, targets[i], i) for i in range(1, c.r + 1))


def brute_force_maximal(targets):
    """(D, maximal colorings) by scanning every coloring on the explicit graph."""
    best = []
    n = 1
    while True:
        good = [c for c in (DifferenceColoring(n + 1, targets.r, w)
                            for w in itertools.product(range(1, targets.r + 1), repeat=n))
                if avoids(c, targets)]
        if not good:
            return n + 1, best
        best = good
        n += 1


def level_of(targets, strings, j):
    masks = []
    for s in strings:
        c = DifferenceColoring.from_string(s, targets.r)
        masks.append(c.masks)
    return SearchLevel(targets, j, tuple(masks))


class TestInitialLevel:
    @pytest.mark.parametrize("sizes,count", [((3, 3), 2), ((3, 4), 2), ((3, 3, 3), 3), ((4, 5), 4)])
    def test_sizes(self, sizes, count):
        level = initial_level(CliqueTargets(sizes))
        assert len(level) == count
        assert level.j == min(sizes) - 1
        assert level.strings() == sorted(level.strings())


class TestExtendLevel:
    def test_c5_dead_end(self):
        level = level_of(T33, ["1221", "2112"], 5)
        child = extend_level(level, T33)
        assert child.j == 6 and len(child) == 0
        # brute force: every 6-vertex extension has a monochromatic triangle
        for s in ("1221", "2112"):
            for c in "12":
                assert not avoids(DifferenceColoring.from_string(s + c, 2), T33)

    def test_second_difference(self):
        child = extend_level(initial_level(T33), T33)
        assert child.strings() == ["12", "21"]
        survivors = [w for w in itertools.product((1, 2), repeat=2)
                     if avoids(DifferenceColoring(3, 2, w), T33)]
        assert len(survivors) == 2

    def test_beam_one(self):
        child = extend_level(initial_level(T33), T33, SearchOptions(beam_cap=1))
        assert len(child) == 1 and child.capped
        assert child.strings() == ["12"]

    def test_parent_restriction(self):
        targets = CliqueTargets((3, 5))
        level = initial_level(targets)
        while True:
            child = extend_level(level, targets)
            if not child.rows:
                break
            parents = set(level.strings())
            assert all(s[:-1] in parents for s in child.strings())
            assert len(set(child.strings())) == len(child)
            level = child

    def test_budget(self):
        with pytest.raises(SearchBudgetError, match="beam cap"):
            search(CliqueTargets((3, 6)), SearchOptions(max_level_size=3))


class TestSearch:
    @pytest.mark.parametrize("sizes", [(3, 3), (3, 4)])
    def test_brute_force(self, sizes):
        targets = CliqueTargets(sizes)
        value, maximal = brute_force_maximal(targets)
        outcome = search(targets)
        assert outcome.value == value
        assert [c.to_string() for c in outcome.maximal_colorings] == [c.to_string() for c in maximal]

    def test_brute_force_three_colors(self):
        targets = CliqueTargets((3, 3, 3))
        # too big to brute force at 14 vertices; brute force that 15 is empty
        # from the 14-vertex survivors and that each survivor is clique-free
        outcome = search(targets)
        assert outcome.value == 15
        for c in outcome.maximal_colorings:
            assert avoids(c, targets)

    @pytest.mark.parametrize("sizes,value,count", [
        ((3, 3), 6, 1), ((3, 4), 9, 2), ((3, 3, 3), 15, None), ((4, 4), 18, 1)])
    def test_values(self, sizes, value, count):
        outcome = search(CliqueTargets(sizes))
        assert outcome.status == EXACT
        assert outcome.value == value
        assert all(c.n == value - 1 for c in outcome.maximal_colorings)
        if count is not None:
            assert outcome.orbit_count == count

    def test_exactness_certificate(self):
        targets = CliqueTargets((3, 6))
        outcome = search(targets)
        for c in outcome.maximal_colorings:
            for color in range(1, 3):
                grown = DifferenceColoring(c.n + 1, 2, c.assignment + (color,))
                assert has_clique(grown.color_class(color), targets[color])

    def test_capped_is_lower_bound(self):
        outcome = search(CliqueTargets((3, 3, 4)), SearchOptions(beam_cap=5))
        assert outcome.status == LOWER_BOUND
        assert outcome.orbit_count is None
        assert outcome.value <= 30
        for c in outcome.maximal_colorings:
            assert avoids(c, outcome.targets)

    def test_beam_reproducible(self):
        opts = SearchOptions(beam_cap=20)
        a = search(CliqueTargets((3, 3, 5)), opts)
        b = search(CliqueTargets((3, 3, 5)), opts)
        assert a == b

    def test_parallel_determinism(self):
        targets = CliqueTargets((3, 7))
        serial = search(targets)
        parallel = search(targets, SearchOptions(parallelism=3))
        assert serial == parallel

    def test_checkpoint_resume(self, tmp_path):
        targets = CliqueTargets((4, 5))
        full = search(targets)
        level = initial_level(targets)
        for _ in range(6):
            level = extend_level(level, targets)
        path = tmp_path / "ck.txt"
        checkpoint_write(level, path)
        resumed = search(targets, resume=checkpoint_read(path))
        assert resumed == full

    def test_checkpoint_option_writes_levels(self, tmp_path):
        path = tmp_path / "ck.txt"
        outcome = search(T33, SearchOptions(checkpoint_path=path))
        level = checkpoint_read(path)
        assert level.j == 5
        assert [c.to_string() for c in outcome.maximal_colorings] == level.strings()

    def test_resume_wrong_targets(self):
        with pytest.raises(ValueError):
            search(CliqueTargets((3, 4)), resume=initial_level(T33))

    def test_monotone(self):
        values = {s: search(CliqueTargets(s)).value
                  for s in [(3, 3), (3, 4), (3, 5), (3, 6), (4, 4), (4, 5)]}
        for (a, b), v in values.items():
            for up in [(a + 1, b), (a, b + 1)]:
                if up in values:
                    assert values[up] >= v


class TestCountOrbits:
    def test_diagonal_swap(self):
        cs = [DifferenceColoring.from_string(s, 2) for s in ("1221", "2112")]
        assert count_orbits(cs, T33) == 1

    def test_distinct_targets(self):
        cs = [DifferenceColoring.from_string(s, 2) for s in ("1221", "2112", "1111")]
        assert count_orbits(cs, CliqueTargets((3, 4))) == 3

    def test_rotation_orbit(self):
        cs = [DifferenceColoring.from_string(s, 3) for s in ("123", "231", "312")]
        assert count_orbits(cs, CliqueTargets((3, 3, 3))) == 1

    def test_partial_symmetry(self):
        # only colors 1 and 2 may be exchanged
        cs = [DifferenceColoring.from_string(s, 3) for s in ("123", "213", "321")]
        assert count_orbits(cs, CliqueTargets((3, 3, 4))) == 2


class TestCheckpointFormat:
    def test_round_trip(self):
        level = extend_level(extend_level(initial_level(T33), T33), T33)
        assert checkpoint_loads(checkpoint_dumps(level)) == level

    def test_capped_round_trip(self):
        level = extend_level(initial_level(T33), T33, SearchOptions(beam_cap=1))
        text = checkpoint_dumps(level)
        assert "capped=1" in text
        assert checkpoint_loads(text) == level

    def test_d33_level5_file(self):
        level = initial_level(T33)
        while level.j < 5:
            level = extend_level(level, T33)
        assert checkpoint_dumps(level) == "targets=3,3\nj=5\n1221\n2112\n"

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("targets=3,3\n", 2),
        ("target=3,3\nj=3\n", 1),
        ("targets=3,3\nj=x\n", 2),
        ("targets=3,3\nj=3\n12\n13\n", 4),
        ("targets=3,3\nj=3\n21\n12\n", 4),
        ("targets=3,3\nj=3\n1\n", 3),
    ])
    def test_errors(self, text, line):
        with pytest.raises(CheckpointError, match=f"line {line}"):
            checkpoint_loads(text)
