"""Closed-form interpolatory subdivision symbols reproducing exponentials,
together with the Chebyshev and big q-Jacobi identities behind them."""

from .chebyshev import (
    ChebPoint,
    cheb_T,
    cheb_T_from_t,
    coupling_C,
    identity_sum_lhs,
    lemma_sum_lhs,
    recip_T_via_phi,
)
from .errors import (
    DegenerateLevelError,
    DegenerateParameterError,
    DomainError,
    NonTerminatingSeriesError,
    SingularMatrixError,
    SingularParameterError,
    UnsupportedBoundaryError,
)
from .laurent import LaurentPoly
from .oracle import build_hurwitz, oracle_symbol, solve_ell
from .qseries import (
    QHyperParams,
    big_q_jacobi,
    gauss_2f1_terminating,
    jacobi_poly,
    pochhammer,
    q_pochhammer,
    q_saalschutz_check,
    rphi_s_terminating,
)
from .subdivision import Polygon, SchemeParams, refine_once, subdivide
from .symbols import (
    LevelParam,
    SubdivisionMask,
    ThetaSpec,
    a_factor,
    b_poly,
    bspline_symbol,
    c_weight,
    closed_form_symbol,
    dd_symbol,
    level_param,
    verify_conditions,
)

__version__ = "0.1.0"
