"""(p,q)-extended Beta, Gauss, and Kummer hypergeometric functions, the
Mathieu-type series built from them, their closed integral representations,
and machine-checked upper bounds.

The quadrature engine, classical special functions, extended functions, and
series evaluators are pure functions of their arguments and safe to call
concurrently.
"""

from .classical import (HyperTriple, beta, gauss_2f1, gauss_2f1_raw, kummer_1f1,
                        log_gamma, luke_bound_rhs, pochhammer)
from .errors import DivergenceError, DomainError, IntegrandError
from .extended import (PQParams, envelope_factor, extended_beta, extended_gauss_integral,
                       extended_gauss_series, extended_kummer, gauss_bound_rhs,
                       kummer_coefficient_table, kummer_series_value)
from .mathieu import (MathieuParams, SequenceSpec, SeriesResult, alternating_counting_value,
                      bound_mathieu_alt_rhs, bound_mathieu_rhs, cahen_integral,
                      closed_tail_2f1, counting_value, mathieu_alt_via_integral,
                      mathieu_alternating_direct, mathieu_direct, mathieu_via_integral,
                      u_integral)
from .quadrature import (DEFAULT_POLICY, IntegrationResult, QuadPolicy, integrate_finite,
                         integrate_finite_xc, integrate_to_infinity)
from .results import EvalResult

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_POLICY",
    "DivergenceError",
    "DomainError",
    "EvalResult",
    "HyperTriple",
    "IntegrandError",
    "IntegrationResult",
    "MathieuParams",
    "PQParams",
    "QuadPolicy",
    "SequenceSpec",
    "SeriesResult",
    "alternating_counting_value",
    "beta",
    "bound_mathieu_alt_rhs",
    "bound_mathieu_rhs",
    "cahen_integral",
    "closed_tail_2f1",
    "counting_value",
    "envelope_factor",
    "extended_beta",
    "extended_gauss_integral",
    "extended_gauss_series",
    "extended_kummer",
    "gauss_2f1",
    "gauss_2f1_raw",
    "gauss_bound_rhs",
    "integrate_finite",
    "integrate_finite_xc",
    "integrate_to_infinity",
    "kummer_1f1",
    "kummer_coefficient_table",
    "kummer_series_value",
    "log_gamma",
    "luke_bound_rhs",
    "mathieu_alt_via_integral",
    "mathieu_alternating_direct",
    "mathieu_direct",
    "mathieu_via_integral",
    "pochhammer",
    "u_integral",
]
