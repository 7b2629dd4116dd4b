"""Exact counting and bound verification for partitions with restricted
parts and multiplicities."""

from .setspec import (
    ALL_PARTS,
    NAT_MULTS,
    AllFrom,
    ArithmeticProgression,
    DoublyExponential,
    Finite,
    IntegerSetSpec,
    InvalidSetError,
    Powers,
    SetSpecError,
    SparseConstructed,
    SpecSyntaxError,
    WithZero,
    construct_sparse_set,
    parse_set_spec,
)
from .arith import (
    FiniteCoprimeSet,
    PrefixGcdTrace,
    coprime_prefix,
    eventually_strictly_increasing,
    frobenius_threshold,
    gcd_of_set,
    is_eventually_positive,
)
from .counting import (
    KERNEL_BACKEND,
    CountTable,
    brute_force_count,
    count_partitions,
    count_table,
    cumulative_count,
    pentagonal_table,
)
from .bounds import (
    BoundReport,
    HighPrecisionReal,
    bound_report,
    check_existence_lower_bound,
    classical_refined_comparison,
    classical_sqrt_lower,
    debruijn_leading_term,
    debruijn_upper_bound,
    harmonic_chain_bound,
    hrr_leading_term,
    j_of_n,
    monotone_lower_bound,
    padberg_lower,
    product_upper_bound,
    refined_lower_bound,
    schur_asymptotic,
    schur_style_point_lower,
    slow_growth_closed_form,
)
from .suites import SUITES, SuiteResult, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "ALL_PARTS",
    "NAT_MULTS",
    "AllFrom",
    "ArithmeticProgression",
    "BoundReport",
    "CountTable",
    "DoublyExponential",
    "Finite",
    "FiniteCoprimeSet",
    "HighPrecisionReal",
    "IntegerSetSpec",
    "InvalidSetError",
    "KERNEL_BACKEND",
    "Powers",
    "PrefixGcdTrace",
    "SUITES",
    "SetSpecError",
    "SparseConstructed",
    "SpecSyntaxError",
    "SuiteResult",
    "WithZero",
    "bound_report",
    "brute_force_count",
    "check_existence_lower_bound",
    "classical_refined_comparison",
    "classical_sqrt_lower",
    "construct_sparse_set",
    "coprime_prefix",
    "count_partitions",
    "count_table",
    "cumulative_count",
    "debruijn_leading_term",
    "debruijn_upper_bound",
    "eventually_strictly_increasing",
    "frobenius_threshold",
    "gcd_of_set",
    "harmonic_chain_bound",
    "hrr_leading_term",
    "is_eventually_positive",
    "j_of_n",
    "monotone_lower_bound",
    "padberg_lower",
    "parse_set_spec",
    "pentagonal_table",
    "product_upper_bound",
    "refined_lower_bound",
    "run_all",
    "run_suite",
    "schur_asymptotic",
    "schur_style_point_lower",
    "slow_growth_closed_form",
    "__version__",
]
