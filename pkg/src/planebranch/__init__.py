"""Exact invariants and normal forms of plane branch singularities."""

from .branch import BranchInputError, PuiseuxParam
from .catalog import (
    EXAMPLE_IDS,
    build_table_row,
    counterexample_change,
    differential_gaps,
    load_samples,
    random_coordinate_change,
    run_reproduction,
)
from .cli import main as cli_main
from .normalform import (
    CoordChange,
    EquivVerdict,
    NormalFormResult,
    apply_coordinate_change,
    compose_changes,
    decide_equivalence,
    dimension_report,
    ec_applicability,
    eliminate_term,
    homothety_solve,
    to_normal_form,
)
from .semigroup import (
    CharData,
    NumericalSemigroup,
    char_exponents_from_generators,
    gaps_above,
    generators_from_char_exponents,
    semigroup_from_generators,
    validate_plane_branch_semigroup,
)
from .series import (
    AboveTruncation,
    BiPoly,
    TSeries,
    bipoly_pullback,
    rat,
    rat_str,
    series_arith,
    series_compose,
    series_order,
    series_reversion,
    series_root_unit,
)
from .valuation import (
    MONOMIAL_CLASS,
    DifferentialForm,
    InternalError,
    ValueSet,
    lambda_set,
    s_sandwich_check,
    semigroup_of_values,
    value_of_differential,
    value_of_function,
    zariski_invariant,
)

__all__ = [
    "AboveTruncation",
    "BiPoly",
    "BranchInputError",
    "CharData",
    "CoordChange",
    "DifferentialForm",
    "EXAMPLE_IDS",
    "EquivVerdict",
    "InternalError",
    "MONOMIAL_CLASS",
    "NormalFormResult",
    "NumericalSemigroup",
    "PuiseuxParam",
    "TSeries",
    "ValueSet",
    "apply_coordinate_change",
    "bipoly_pullback",
    "build_table_row",
    "char_exponents_from_generators",
    "cli_main",
    "counterexample_change",
    "differential_gaps",
    "compose_changes",
    "decide_equivalence",
    "dimension_report",
    "ec_applicability",
    "eliminate_term",
    "gaps_above",
    "generators_from_char_exponents",
    "homothety_solve",
    "lambda_set",
    "load_samples",
    "random_coordinate_change",
    "rat",
    "rat_str",
    "run_reproduction",
    "s_sandwich_check",
    "semigroup_from_generators",
    "semigroup_of_values",
    "series_arith",
    "series_compose",
    "series_order",
    "series_reversion",
    "series_root_unit",
    "to_normal_form",
    "validate_plane_branch_semigroup",
    "value_of_differential",
    "value_of_function",
    "zariski_invariant",
]

__version__ = "0.1.0"
