"""Exact degenerate Stirling, Euler, Changhee, Bell and harmonic families in ℚ[λ][x]."""

from .algebra import (
    AlgebraError,
    BiPoly,
    IndexBeyondOrder,
    LambdaPoly,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    Series,
    Triangle,
    egf_coefficient,
    format_poly,
    format_rational,
    from_array,
    parse_poly,
    parse_rational,
    poly_eval_lambda,
    series_add,
    series_compose,
    series_div,
    series_mul,
    series_pow,
    to_array,
)
from .functions import (
    NumberSequence,
    PolySequence,
    RouteMismatch,
    bell_poly_deg,
    carlitz_euler,
    degenerate_exp,
    degenerate_log,
    degenerate_sech,
    falling_factorial_deg,
    generalized_harmonic_deg,
    harmonic_numbers_deg,
    harmonic_poly_deg,
    jindalrae1,
    jindalrae2,
    stirling1_deg,
    stirling2_deg,
    stirling_connection_oracle,
    stirling_transform_pair,
    type2_changhee,
    type2_euler_deg,
)
from .harness import CheckReport, run_all

__version__ = "0.1.0"
