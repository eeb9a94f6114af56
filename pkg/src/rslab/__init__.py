"""Exact verification toolkit for convolution L-series coefficient identities,
character-sum reductions, and functional-equation bookkeeping over Q."""

from .scalars import EXACT, FLOAT, FLOAT_TOL, RootOfUnity, coerce
from .euler import DirichletSeries, EulerFactorPoly, NotDivisibleError, assemble_global
from .symfunc import Partition3, cauchy_check, schur3, schur3_tableau
from .cyclotomic import CycloElement
from .characters import DirichletCharacter, char_group, gauss_beta, gauss_classical
from .langlands import GlobalRep, LocalData, SteinbergBlock
from .coeffs import CoeffData, c_pi_tau, double_sum_check, lambda_rs, lambda_std
from .matid import CosetContext, FactorizationInstance, Mat, coset_reduce
from .twists import AdditiveTwistSeries, TwistedSeries, assemble_twisted_series, fe_root_number
from .funceq import dirichlet_L, fe_residual_dirichlet, hurwitz_zeta, synthetic_fe_check
from .registry import CHECKS, RunConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "EXACT", "FLOAT", "FLOAT_TOL", "RootOfUnity", "coerce",
    "DirichletSeries", "EulerFactorPoly", "NotDivisibleError", "assemble_global",
    "Partition3", "cauchy_check", "schur3", "schur3_tableau",
    "CycloElement",
    "DirichletCharacter", "char_group", "gauss_beta", "gauss_classical",
    "GlobalRep", "LocalData", "SteinbergBlock",
    "CoeffData", "c_pi_tau", "double_sum_check", "lambda_rs", "lambda_std",
    "CosetContext", "FactorizationInstance", "Mat", "coset_reduce",
    "AdditiveTwistSeries", "TwistedSeries", "assemble_twisted_series", "fe_root_number",
    "dirichlet_L", "fe_residual_dirichlet", "hurwitz_zeta", "synthetic_fe_check",
    "CHECKS", "RunConfig", "run_suite",
    "__version__",
]
