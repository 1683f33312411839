"""Indecomposable solutions of linear congruences: enumeration,
reduction, extremal classification, counting bounds, and subset-sum
diversity, all in exact arithmetic."""

from .core import (
    BudgetExceeded,
    CongruenceInstance,
    DomainError,
    NormalForm,
    SolutionMetrics,
    binomial,
    euler_phi,
    leq,
    metrics,
    weight_mod,
)
from .enumeration import (
    EnumerationResult,
    enumerate_naive,
    enumerate_normal_form,
    enumerate_standard,
    is_indecomposable,
    naive_minimal_solutions,
    solve_n1,
)
from .reduction import (
    ReductionPlan,
    build_plan,
    count_general,
    general_support_bounds_check,
    lift_solutions,
)
from .extremal import (
    ExtremalSolution,
    extremal_all,
    extremal_width1,
    extremal_width2,
    verify_extremal,
)
from .bounds import (
    BoundsRow,
    bound_q,
    bound_r,
    bound_simplex,
    log2_rounded,
    partition_count,
    stirling_central,
    support_capacity,
    table2,
)
from .subset_sums import (
    DiversityReport,
    IndexSet,
    diversity,
    diversity_closure,
    family_Tma,
    lemma_expls_checks,
    verify_general,
    verify_r3,
    verify_r4,
)

__all__ = [name for name in dir() if not name.startswith("_")]
