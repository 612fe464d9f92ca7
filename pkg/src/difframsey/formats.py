"""Text formats: coloring files and search results files.

Coloring file::

    # the 59-vertex witness for (3,3,6)
    n=59
    r=3
    kind=difference
    cyclic=1
    1: 5 12 13 14 16 20 22
    2: 10 15 19 24 26 27
    3: 1 2 3 4 6 7 8 9 11 17 18 21 23 25 28 29

Header keys may share a line (``n=6 r=2 kind=integer``).  Members may be
separated by spaces or commas, and a class line may be written ``Color 1:``.
At most one class may be left out; it receives every remaining element, which
matches listing only the red integers of a two-coloring.

Results file::

    kind=ramsey
    status=exact
    value=6
    targets=3,3
    count=1
    1221
    2112
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    MAX_COLORS,
    MAX_VERTICES,
    CliqueTargets,
    ColoringError,
    CyclicColoring,
    DifferenceColoring,
    expand_cyclic,
    make_difference_coloring,
)
from .issai import IntegerColoring
from .search import EXACT, LOWER_BOUND, SearchOutcome

__all__ = [
    "FormatError",
    "ColoringFile",
    "parse_coloring_file",
    "format_coloring_file",
    "coloring_file_for",
    "dumps_results",
    "loads_results",
]

_HEADER_KEYS = ("n", "r", "kind", "cyclic")
_CLASS_LINE = re.compile(r"^(?:color\s*)?(\d+)\s*:(.*)$", re.IGNORECASE)
_KV = re.compile(r"^([A-Za-z_]+)=(\S*)$")


class FormatError(ValueError):
    """Malformed file; the message starts with the offending line number when known."""


@dataclass(frozen=True)
class ColoringFile:
    n: int
    r: int
    kind: str
    cyclic: bool
    classes: tuple[tuple[int, ...], ...]
    coloring: DifferenceColoring | IntegerColoring


def _ints(text: str, lineno: int) -> list[int]:
    out = []
    for tok in re.split(r"[\s,]+", text.strip()):
        if not tok:
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise FormatError(f"line {lineno}: {tok!r} is not an integer") from None
    return out


def parse_coloring_file(text: str) -> ColoringFile:
    header: dict[str, str] = {}
    listed: dict[int, tuple[int, list[int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _CLASS_LINE.match(line)
        if m:
            color = int(m.group(1))
            if color in listed:
                raise FormatError(f"line {lineno}: color {color} listed twice")
            listed[color] = (lineno, _ints(m.group(2), lineno))
            continue
        if listed:
            raise FormatError(f"line {lineno}: header line after color classes: {line!r}")
        for tok in line.split():
            kv = _KV.match(tok)
            if not kv:
                raise FormatError(f"line {lineno}: bad header token {tok!r}")
            key, value = kv.group(1).lower(), kv.group(2)
            if key not in _HEADER_KEYS:
                raise FormatError(f"line {lineno}: unknown header key {key!r}")
            if key in header:
                raise FormatError(f"line {lineno}: duplicate header key {key!r}")
            header[key] = value

    for key in ("n", "r"):
        if key not in header:
            raise FormatError(f"missing '{key}=' header")
    try:
        n = int(header["n"])
        r = int(header["r"])
        cyclic_flag = int(header.get("cyclic", "0"))
    except ValueError:
        raise FormatError("header values n, r and cyclic must be integers") from None
    kind = header.get("kind", "difference")
    if kind not in ("difference", "integer"):
        raise FormatError(f"kind must be 'difference' or 'integer', got {kind!r}")
    if cyclic_flag not in (0, 1):
        raise FormatError(f"cyclic must be 0 or 1, got {cyclic_flag}")
    cyclic = bool(cyclic_flag)
    if cyclic and kind != "difference":
        raise FormatError("cyclic=1 only applies to difference colorings")
    if not 1 <= r <= MAX_COLORS:
        raise FormatError(f"r={r} outside 1..{MAX_COLORS}")
    if not 1 <= n <= MAX_VERTICES:
        raise FormatError(f"n={n} outside 1..{MAX_VERTICES}")

    for color, (lineno, _) in listed.items():
        if not 1 <= color <= r:
            raise FormatError(f"line {lineno}: color {color} outside 1..{r}")
    if kind == "integer":
        domain = range(1, n + 1)
    elif cyclic:
        domain = range(1, n // 2 + 1)
    else:
        domain = range(1, n)
    lo, hi = domain.start, domain.stop - 1

    owner: dict[int, int] = {}
    for color in sorted(listed):
        lineno, members = listed[color]
        for x in members:
            if not lo <= x <= hi:
                what = "integer" if kind == "integer" else "difference"
                raise FormatError(f"line {lineno}: {what} {x} outside {lo}..{hi}")
            if x in owner:
                raise FormatError(
                    f"line {lineno}: {x} listed for colors {owner[x]} and {color}"
                )
            owner[x] = color

    missing_colors = [c for c in range(1, r + 1) if c not in listed]
    if len(missing_colors) > 1:
        raise FormatError(f"colors {missing_colors} have no class line")
    uncovered = [x for x in domain if x not in owner]
    if missing_colors:
        for x in uncovered:
            owner[x] = missing_colors[0]
    elif uncovered:
        raise FormatError(f"{uncovered[0]} is not colored")

    classes = tuple(
        tuple(sorted(x for x, c in owner.items() if c == color)) for color in range(1, r + 1)
    )
    try:
        if kind == "integer":
            coloring = IntegerColoring.from_classes(n, classes)
        elif cyclic:
            coloring = expand_cyclic(CyclicColoring(n, owner, r))
        else:
            coloring = make_difference_coloring(n, classes)
    except ColoringError as exc:
        raise FormatError(str(exc)) from None
    return ColoringFile(n, r, kind, cyclic, classes, coloring)


def format_coloring_file(cf: ColoringFile, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines += [f"n={cf.n}", f"r={cf.r}", f"kind={cf.kind}", f"cyclic={int(cf.cyclic)}"]
    for color, members in enumerate(cf.classes, start=1):
        lines.append(f"{color}: " + " ".join(map(str, members)) if members else f"{color}:")
    return "\n".join(lines) + "\n"


def coloring_file_for(coloring: DifferenceColoring | IntegerColoring, cyclic: bool = False) -> ColoringFile:
    """Wrap an in-memory coloring; ``cyclic=True`` lists only the half range."""
    if isinstance(coloring, IntegerColoring):
        return ColoringFile(coloring.n, coloring.r, "integer", False, coloring.classes, coloring)
    if cyclic:
        if not coloring.is_cyclic():
            raise ValueError("coloring is not cyclic")
        top = coloring.n // 2
        classes = tuple(tuple(d for d in cls if d <= top) for cls in coloring.classes)
    else:
        classes = coloring.classes
    return ColoringFile(coloring.n, coloring.r, "difference", cyclic, classes, coloring)


def dumps_results(outcome: SearchOutcome) -> str:
    count = "n/a" if outcome.orbit_count is None else str(outcome.orbit_count)
    lines = [
        f"kind={outcome.kind}",
        f"status={outcome.status}",
        f"value={outcome.value}",
        f"targets={outcome.targets.label()}",
        f"count={count}",
    ]
    lines += [c.to_string() for c in outcome.maximal_colorings]
    return "\n".join(lines) + "\n"


def loads_results(text: str) -> SearchOutcome:
    lines = [ln.strip() for ln in text.splitlines()]
    header: dict[str, str] = {}
    body: list[tuple[int, str]] = []
    for lineno, line in enumerate(lines, start=1):
        if not line or line.startswith("#"):
            continue
        if "=" in line and not body:
            key, _, value = line.partition("=")
            header[key.strip()] = value.strip()
        else:
            body.append((lineno, line))
    for key in ("kind", "status", "value", "targets", "count"):
        if key not in header:
            raise FormatError(f"results file lacks '{key}=' header")
    kind = header["kind"]
    if kind not in ("ramsey", "issai"):
        raise FormatError(f"unknown results kind {kind!r}")
    status = header["status"]
    if status not in (EXACT, LOWER_BOUND):
        raise FormatError(f"unknown status {status!r}")
    try:
        targets = CliqueTargets.parse(header["targets"])
        value = int(header["value"])
        count = None if header["count"] == "n/a" else int(header["count"])
    except ValueError as exc:
        raise FormatError(f"bad results header: {exc}") from None
    cls = DifferenceColoring if kind == "ramsey" else IntegerColoring
    colorings = []
    for lineno, word in body:
        try:
            colorings.append(cls.from_string(word, targets.r))
        except (ValueError, ColoringError) as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return SearchOutcome(targets, status, value, tuple(colorings), count, kind)
