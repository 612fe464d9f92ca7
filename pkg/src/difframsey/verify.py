"""Independent checks of externally supplied colorings."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CliqueTargets,
    ColoringError,
    DifferenceColoring,
    clique_vertices,
    find_clique,
    materialize,
    oracle_find_mono_clique,
)
from .issai import IntegerColoring, find_mono_schur_tuple


@dataclass(frozen=True)
class ColorCheck:
    color: int
    k: int
    passed: bool
    # clique vertices for difference colorings, Schur tuple entries for integer ones
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Verification:
    kind: str
    n: int
    targets: CliqueTargets
    checks: tuple[ColorCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        if self.kind == "difference":
            what = "K_{k} (difference lemma + explicit graph)"
        else:
            what = "Schur {k}-tuple"
        for c in self.checks:
            label = what.format(k=c.k)
            if c.passed:
                out.append(f"color {c.color}: no monochromatic {label}: pass")
            else:
                noun = "vertices" if self.kind == "difference" else "tuple"
                wit = " ".join(map(str, c.witness or ()))
                out.append(f"color {c.color}: FAIL, {label} on {noun} {wit}")
        verdict = "PASS" if self.passed else "FAIL"
        out.append(f"{verdict}: n={self.n}, targets ({self.targets.label()})")
        return out


class OracleDisagreement(AssertionError):
    pass


def verify_coloring(coloring, targets: CliqueTargets) -> Verification:
    """Check every color class against its forbidden structure.

    Difference colorings are checked twice: by the difference-set clique test
    and by subset enumeration on the materialized graph.  The two must agree.
    """
    if coloring.r != targets.r:
        raise ColoringError(f"coloring has {coloring.r} colors but {targets.r} targets were given")
    checks = []
    if isinstance(coloring, DifferenceColoring):
        graph = materialize(coloring)
        for color in range(1, coloring.r + 1):
            k = targets[color]
            found = find_clique(coloring.color_class(color), k)
            oracle = oracle_find_mono_clique(graph, k, color)
            if (found is None) != (oracle is None):
                raise OracleDisagreement(
                    f"color {color}, K_{k}: difference test says {found}, explicit graph says {oracle}"
                )
            witness = clique_vertices(found) if found is not None else None
            checks.append(ColorCheck(color, k, found is None, witness))
        kind = "difference"
    elif isinstance(coloring, IntegerColoring):
        for color in range(1, coloring.r + 1):
            k = targets[color]
            hit = find_mono_schur_tuple(coloring, targets, colors=[color])
            checks.append(ColorCheck(color, k, hit is None, hit.entries if hit else None))
        kind = "integer"
    else:
        raise TypeError(f"cannot verify {type(coloring).__name__}")
    return Verification(kind, coloring.n, targets, tuple(checks))
