"""Middle levels Gray codes: a Hamilton cycle through all (2n+1)-bit strings
of weight n or n+1, generated in O(n) amortized time per string."""
from .bitseq import (
    Bits,
    LatticeClass,
    classify,
    format_bits,
    in_class,
    middle_level_count,
    parse_bits,
    pi_perm,
    rev_inv,
)
from .errors import DomainError, InvalidArgument, ResourceLimitError, UnderflowError
from .flipsel import is_flip_vertex
from .hamcycle import CycleIterator, StepStats, ham_cycle, ham_cycle_flip, iter_cycle, iter_new, iter_next
from .lazyview import LazyView
from .paths import NEXT, PREV, Direction, path_from_first, paths_step, paths_step_fast

__all__ = [
    "Bits",
    "CycleIterator",
    "Direction",
    "DomainError",
    "InvalidArgument",
    "LatticeClass",
    "LazyView",
    "NEXT",
    "PREV",
    "ResourceLimitError",
    "StepStats",
    "UnderflowError",
    "classify",
    "format_bits",
    "ham_cycle",
    "ham_cycle_flip",
    "in_class",
    "is_flip_vertex",
    "iter_cycle",
    "iter_new",
    "iter_next",
    "middle_level_count",
    "parse_bits",
    "path_from_first",
    "paths_step",
    "paths_step_fast",
    "pi_perm",
    "rev_inv",
]
