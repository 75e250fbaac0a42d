"""Orthogonal polynomials on the simplex, their Fourier transforms, and a
Gamma-weighted orthogonal family, with quadrature-backed verification."""

__version__ = "0.1.0"

from .classical import (
    hahn_eval,
    jacobi_eval,
    jacobi_explicit_sum,
    jacobi_norm,
    jacobi_shifted_eval,
)
from .errors import (
    AnalyticContinuationWarning,
    BudgetInfeasibleError,
    DegenerateParameterError,
    DimensionMismatchError,
    GammaPoleError,
    NonTerminatingSeriesError,
    OrthosimplexError,
    ParameterRangeError,
    RankDeficientError,
    RuleMismatchError,
    StencilOutsideDomainError,
    ZeroDenominatorError,
)
from .fourier import (
    GParams,
    ft_closed_form,
    ft_numeric,
    ft_numeric_axis,
    ft_recursion_check,
    g_eval,
    g_factored_eval,
    g_recursion_check,
    lambda_factor,
)
from .hypergeom import HyperParams, eval_terminating, hyp3f2, termination_index
from .numerics import LogGammaValue, beta, gamma, log_gamma, log_gamma_complex, pochhammer
from .quadrature import QuadratureRule, gauss_jacobi, gauss_jacobi_unit, line_rule, simplex_rule
from .recurrences import (
    ALL_RELATION_IDS,
    ERRATA,
    BruteForceResult,
    RelationId,
    brute_force_coefficients,
    coefficients,
    residual,
    sample_params,
    s_value,
    term_values,
)
from .reports import VerificationReport, make_report
from .sfamily import (
    SParams,
    s_eval,
    s_orthogonality_check,
    s_orthogonality_rhs,
    s_relation_check,
    w_weight,
)
from .simplex import (
    h_norm,
    jacobi_pair,
    multi_indices,
    orthogonality_check,
    pde_residual,
    simplex_poly_eval,
    tail_sum,
)
from .suites import run_all, run_fourier, run_orthogonality, run_recurrences, run_sfamily
