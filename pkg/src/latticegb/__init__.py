"""Homogeneous Buchberger algorithm for binomial and lattice ideals."""

from .algebra import (
    Cmp,
    Grading,
    OrientedBinomial,
    TermOrder,
    check_homogeneous,
    compare,
    decompose,
    degree_of,
    orient,
)
from .engine import (
    CompletedGB,
    NotSaturated,
    RunStats,
    SPair,
    TruncatedGB,
    buchberger,
    interreduce,
    membership,
    saturate,
    update_spairs,
)
from .reduction import ReductionResult, find_reducer, normal_form_sat, sat_reduce_step

__version__ = "0.1.0"

__all__ = [
    "Cmp", "Grading", "OrientedBinomial", "TermOrder", "check_homogeneous", "compare",
    "decompose", "degree_of", "orient", "CompletedGB", "NotSaturated", "RunStats", "SPair",
    "TruncatedGB", "buchberger", "interreduce", "membership", "saturate", "update_spairs",
    "ReductionResult", "find_reducer", "normal_form_sat", "sat_reduce_step",
]
