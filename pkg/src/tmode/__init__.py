"""Mode values, ball probabilities and radial moments of isotropic
multivariate Student t distributions, with the Gaussian as the
infinite-degrees-of-freedom member of the family.
"""

from .ballprob import (
    QuadResult,
    QuadSpec,
    Table1Row,
    ball_prob,
    ball_prob_quadrature,
    format_published,
    table1,
)
from .errors import (
    DimensionMismatchError,
    DomainError,
    MomentExistenceError,
    MonotonicityViolationError,
    QuadratureConvergenceError,
)
from .mcoracle import (
    SampleBatch,
    SplitMix64,
    estimate_ball_prob,
    estimate_ball_prob_prefixes,
    sample_t,
)
from .monotone import (
    MonotonicityReport,
    classify_monotonicity,
    default_nu_grid,
    dlog_mode_value,
    induction_step_check,
    mode_value_even_product,
)
from .specfun import digamma, log_gamma, polygamma, reg_inc_beta, reg_lower_inc_gamma
from .tdist import (
    GAUSSIAN_DOF,
    check_dim,
    check_dof,
    kurtosis_ratio,
    log_density,
    log_mode_value,
    mode_value,
    moment_ratio,
    radial_moment,
)

__version__ = "0.1.0"

__all__ = [
    "GAUSSIAN_DOF",
    "DimensionMismatchError",
    "DomainError",
    "MomentExistenceError",
    "MonotonicityReport",
    "MonotonicityViolationError",
    "QuadResult",
    "QuadSpec",
    "QuadratureConvergenceError",
    "SampleBatch",
    "SplitMix64",
    "Table1Row",
    "ball_prob",
    "ball_prob_quadrature",
    "check_dim",
    "check_dof",
    "classify_monotonicity",
    "default_nu_grid",
    "digamma",
    "dlog_mode_value",
    "estimate_ball_prob",
    "estimate_ball_prob_prefixes",
    "format_published",
    "induction_step_check",
    "kurtosis_ratio",
    "log_density",
    "log_gamma",
    "log_mode_value",
    "mode_value",
    "mode_value_even_product",
    "moment_ratio",
    "polygamma",
    "radial_moment",
    "reg_inc_beta",
    "reg_lower_inc_gamma",
    "sample_t",
    "table1",
    "__version__",
]
