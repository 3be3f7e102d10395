"""Greedy and exact solvers for shortest linear and circular superstrings."""
from superstrings.errors import *  # noqa: F401,F403
from superstrings.exact import ExactResult, exact_circular, exact_linear, oracle_circular, oracle_linear
from superstrings.greedy import (
    MergeStep,
    MergeTrace,
    TiePolicy,
    enumerate_greedy_circular,
    enumerate_greedy_linear,
    greedy_circular,
    greedy_linear,
)
from superstrings.reduction import (
    ReducedInstance,
    ReductionReport,
    bar,
    canonical_linearization,
    check_lemma_equal,
    check_lemma_g,
    check_lemma_greedy,
    check_lemma_ineq,
    f_reduce,
    g_extract,
    unbar,
)
from superstrings.strings import (
    Alphabet,
    CircularString,
    InstanceSet,
    circularize,
    contains_circular,
    is_circular_superstring,
    is_linear_superstring,
    is_substring,
    merge,
    normalize,
    overlap,
    restrict,
)
from superstrings.subset_system import (
    PairElement,
    PairSelection,
    build_universe,
    generic_greedy,
    is_independent,
    selection_to_superstring,
)

__version__ = "0.1.0"
