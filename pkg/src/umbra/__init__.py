"""Truncated power series, shift-symbol calculus, Borel-type coefficient
transforms, and a numerically verified identity catalog."""

from .series import (
    DEFAULT_ORDER,
    DivergentSeriesError,
    EvalResult,
    SeriesError,
    TruncatedSeries,
)
from .umbral import (
    FunctionalDomainError,
    UmbralError,
    UmbralExpression,
    UmbralFunctional,
    UmbralTerm,
    functional_by_name,
    hermite_functional,
    laguerre_functional,
    umbral_binomial,
    umbral_exp,
    umbral_exp_gaussian,
    umbral_geometric,
)
from .transforms import (
    TransformError,
    TransformSpec,
    borel_apply,
    borel_integral_form,
    laplace_link_check,
    mellin_numeric,
    proposition1_check,
)
from .quadrature import (
    OscillatorySpec,
    QuadratureError,
    QuadratureResult,
    gauss_laguerre_integrate,
    gauss_laguerre_nodes,
    integrate_finite,
    integrate_oscillatory,
    integrate_real_line,
)
from .catalog import CheckReport, IdentityCheck, all_ids, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ORDER",
    "DivergentSeriesError",
    "EvalResult",
    "SeriesError",
    "TruncatedSeries",
    "FunctionalDomainError",
    "UmbralError",
    "UmbralExpression",
    "UmbralFunctional",
    "UmbralTerm",
    "functional_by_name",
    "hermite_functional",
    "laguerre_functional",
    "umbral_binomial",
    "umbral_exp",
    "umbral_exp_gaussian",
    "umbral_geometric",
    "TransformError",
    "TransformSpec",
    "borel_apply",
    "borel_integral_form",
    "laplace_link_check",
    "mellin_numeric",
    "proposition1_check",
    "OscillatorySpec",
    "QuadratureError",
    "QuadratureResult",
    "gauss_laguerre_integrate",
    "gauss_laguerre_nodes",
    "integrate_finite",
    "integrate_oscillatory",
    "integrate_real_line",
    "CheckReport",
    "IdentityCheck",
    "all_ids",
    "run_all",
    "run_check",
    "__version__",
]
