"""Markdown and LaTeX write-ups of a search outcome."""

from __future__ import annotations

from .formats import coloring_file_for, format_coloring_file
from .search import SearchOutcome
from .verify import verify_coloring

__all__ = ["render_report", "ReportError"]


class ReportError(RuntimeError):
    pass


def _claims(outcome: SearchOutcome, geq: str) -> tuple[str, list[str]]:
    t = outcome.targets.label()
    v = outcome.value
    if outcome.kind == "ramsey":
        title = f"A lower bound for R({t})"
        if outcome.exact:
            lines = [f"D({t}) = {v}", f"R({t}) {geq} {v}"]
        else:
            lines = [f"D({t}) {geq} {v}", f"R({t}) {geq} {v}"]
    else:
        title = f"The Issai number S({t})"
        lines = [f"S({t}) = {v}" if outcome.exact else f"S({t}) {geq} {v}"]
    return title, lines


def _witness(outcome: SearchOutcome):
    if not outcome.maximal_colorings:
        raise ReportError("outcome has no maximal coloring to report")
    witness = outcome.maximal_colorings[0]
    check = verify_coloring(witness, outcome.targets)
    if not check.passed:
        raise ReportError("witness coloring fails verification:\n" + "\n".join(check.lines()))
    text = format_coloring_file(coloring_file_for(witness))
    return witness, check, text


def _describe(outcome: SearchOutcome, n: int) -> str:
    ks = ", ".join(map(str, outcome.targets.sizes))
    if outcome.kind == "ramsey":
        how = (
            "an exhaustive level-by-level search of difference colorings"
            if outcome.exact
            else "a beam-capped level-by-level search of difference colorings"
            " (or an externally supplied coloring)"
        )
        return (
            f"Clique sizes ({ks}). The bound comes from {how}. "
            f"The witness below colors the differences of the complete graph on {n} vertices; "
            f"edge {{i,j}} takes the color of |i-j|."
        )
    how = "an exhaustive search" if outcome.exact else "a capped search (or an externally supplied coloring)"
    return (
        f"Schur tuple sizes ({ks}), found by {how} over colorings of the integers. "
        f"The witness below colors 1..{n} with no color-i Schur k_i-tuple."
    )


def _count_line(outcome: SearchOutcome) -> str | None:
    if outcome.orbit_count is None:
        return None
    noun = "maximal graphs" if outcome.kind == "ramsey" else "maximal colorings"
    return (
        f"{noun.capitalize()}: {outcome.orbit_count} up to target-preserving color permutations "
        f"({len(outcome.maximal_colorings)} in total)."
    )


def render_report(outcome: SearchOutcome, fmt: str = "markdown") -> str:
    """Self-contained document stating the bound, one witness and its verification."""
    if fmt not in ("markdown", "latex"):
        raise ValueError(f"unknown report format {fmt!r}")
    witness, check, coloring_text = _witness(outcome)
    if fmt == "markdown":
        title, claims = _claims(outcome, "≥")
        out = [f"# {title}", "", _describe(outcome, witness.n), "", "## Result", ""]
        out += [f"- {c}" for c in claims]
        count = _count_line(outcome)
        if count:
            out += ["", count]
        out += ["", "## Witness coloring", "", "```", coloring_text.rstrip("\n"), "```"]
        out += ["", "## Verification", "", "```"] + check.lines() + ["```", ""]
        return "\n".join(out)

    title, claims = _claims(outcome, r"\geq")
    out = [
        r"\documentclass{article}",
        r"\begin{document}",
        rf"\section*{{{title}}}",
        _describe(outcome, witness.n).replace("|i-j|", r"$|i-j|$").replace("k_i", "$k_i$"),
        "",
        r"\paragraph{Result.}",
        r"\begin{itemize}",
    ]
    out += [rf"\item ${c}$" for c in claims]
    out.append(r"\end{itemize}")
    count = _count_line(outcome)
    if count:
        out.append(count)
    out += [
        "",
        r"\paragraph{Witness coloring.}",
        r"\begin{verbatim}",
        coloring_text.rstrip("\n"),
        r"\end{verbatim}",
        "",
        r"\paragraph{Verification.}",
        r"\begin{verbatim}",
        *check.lines(),
        r"\end{verbatim}",
        r"\end{document}",
        "",
    ]
    return "\n".join(out)
