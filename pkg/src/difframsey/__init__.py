"""Difference Ramsey numbers and Issai (generalized Schur) numbers.

    >>> from difframsey import CliqueTargets, search
    >>> search(CliqueTargets((3, 4))).value
    9
"""

from .core import (
    MAX_COLORS,
    MAX_VERTICES,
    CliqueTargets,
    ColoringError,
    CyclicColoring,
    DifferenceColoring,
    DifferenceSet,
    ExplicitGraph,
    clique_vertices,
    creates_clique_with,
    expand_cyclic,
    find_clique,
    has_clique,
    make_difference_coloring,
    materialize,
    oracle_find_mono_clique,
    oracle_has_mono_clique,
)
from .issai import (
    IntegerColoring,
    SchurWitness,
    creates_schur_tuple_with,
    extract_schur_tuple,
    find_mono_schur_tuple,
    is_schur_tuple,
    issai_search,
    lemma2_bound,
)
from .search import (
    CheckpointError,
    SearchBudgetError,
    SearchLevel,
    SearchOptions,
    SearchOutcome,
    checkpoint_read,
    checkpoint_write,
    count_orbits,
    extend_level,
    initial_level,
    search,
)
from .formats import ColoringFile, FormatError, parse_coloring_file
from .verify import verify_coloring
from .report import render_report

__version__ = "0.1.0"
