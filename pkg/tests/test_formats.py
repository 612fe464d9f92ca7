import pytest
from hypothesis import given, strategies as st

from difframsey.core import CliqueTargets, DifferenceColoring
from difframsey.formats import (
    FormatError,
    coloring_file_for,
    dumps_results,
    format_coloring_file,
    loads_results,
    parse_coloring_file,
)
from difframsey.issai import IntegerColoring, issai_search
from difframsey.search import search


def test_cyclic_59(data_dir):
    cf = parse_coloring_file((data_dir / "d336_cyclic59.txt").read_text())
    assert (cf.n, cf.r, cf.kind, cf.cyclic) == (59, 3, "difference", True)
    assert len(cf.classes[2]) == 16
    assert cf.coloring.n == 59 and cf.coloring.is_cyclic()


def test_one_line_header_red_only():
    cf = parse_coloring_file("n=6 r=2 kind=integer\n1: 1 6\n")
    assert isinstance(cf.coloring, IntegerColoring)
    assert cf.classes == ((1, 6), (2, 3, 4, 5))


def test_paper_style_listing():
    cf = parse_coloring_file("n=5 r=2\nColor 1: 1,4\nColor 2: 2, 3  # tail comment\n")
    assert cf.coloring.to_string() == "1221"


@pytest.mark.parametrize("text,msg", [
    ("n=4 r=2\n1: 0 1\n2: 2 3\n", "difference 0 outside 1..3"),
    ("n=4 r=2\n1: 1 2\n2: 2 3\n", "line 3: 2 listed for colors 1 and 2"),
    ("n=4 r=2\n1: 1\n2: 2\n", "3 is not colored"),
    ("n=4 r=3\n1: 1\n", r"colors \[2, 3\] have no class line"),
    ("n=4 r=2 bogus=1\n", "line 1: unknown header key"),
    ("n=4\n1: 1 2 3\n", "missing 'r='"),
    ("n=4 r=2\n1: 1\nr=3\n", "line 3: header line after"),
    ("n=4 r=2\n1: 1 x\n", "line 2: 'x' is not an integer"),
    ("n=4 r=2\n3: 1\n", "line 2: color 3 outside"),
    ("n=6 r=2 cyclic=1\n1: 1 2 3 4\n2:\n", "line 2: difference 4 outside 1..3"),
    ("n=6 r=2 kind=integer cyclic=1\n1: 1\n", "cyclic=1 only applies"),
])
def test_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        parse_coloring_file(text)


@given(st.integers(2, 40).flatmap(
    lambda n: st.tuples(st.integers(1, 4), st.lists(st.integers(0, 10**6), min_size=n - 1, max_size=n - 1))))
def test_difference_round_trip(case):
    r, raw = case
    c = DifferenceColoring(len(raw) + 1, r, [1 + x % r for x in raw])
    back = parse_coloring_file(format_coloring_file(coloring_file_for(c)))
    assert back.coloring == c


@given(st.integers(1, 3), st.lists(st.integers(0, 10**6), min_size=1, max_size=40))
def test_integer_round_trip(r, raw):
    c = IntegerColoring(len(raw), r, [1 + x % r for x in raw])
    assert parse_coloring_file(format_coloring_file(coloring_file_for(c))).coloring == c


def test_cyclic_round_trip(data_dir):
    c = parse_coloring_file((data_dir / "d336_cyclic59.txt").read_text()).coloring
    text = format_coloring_file(coloring_file_for(c, cyclic=True))
    assert "cyclic=1" in text
    assert parse_coloring_file(text).coloring == c


@pytest.mark.parametrize("outcome", [
    search(CliqueTargets((3, 5))),
    issai_search(CliqueTargets((3, 4))),
])
def test_results_round_trip(outcome):
    assert loads_results(dumps_results(outcome)) == outcome


def test_results_text():
    text = dumps_results(search(CliqueTargets((3, 3))))
    assert text == "kind=ramsey\nstatus=exact\nvalue=6\ntargets=3,3\ncount=1\n1221\n2112\n"


def test_results_errors():
    with pytest.raises(FormatError, match="lacks 'count='"):
        loads_results("kind=ramsey\nstatus=exact\nvalue=6\ntargets=3,3\n")
    with pytest.raises(FormatError, match="line 6"):
        loads_results("kind=ramsey\nstatus=exact\nvalue=6\ntargets=3,3\ncount=1\n1231\n")
