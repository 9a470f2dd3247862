"""Mather-Jacobian multiplier ideals of monomial ideals on affine toric varieties."""

from .errors import BudgetError, InputError, ToricMJError
from .jacobian import JacobianData, jacobian_data, jprime, log_jacobian
from .multiplier import (MJContext, build_context, jumping_candidates, mj_generators,
                         mj_membership, mj_threshold)
from .resolution import build_resolution, oracle_membership, verify_resolution
from .semigroup import AffineSemigroup, MonomialSIdeal, normalize_coordinates
from .toric_ideal import MarkovBasis, accept_user_basis, markov_basis

__version__ = "0.1.0"

__all__ = [
    "AffineSemigroup", "BudgetError", "InputError", "JacobianData", "MJContext", "MarkovBasis",
    "MonomialSIdeal", "ToricMJError", "accept_user_basis", "build_context", "build_resolution",
    "jacobian_data", "jprime", "jumping_candidates", "log_jacobian", "markov_basis",
    "mj_generators", "mj_membership", "mj_threshold", "normalize_coordinates",
    "oracle_membership", "verify_resolution",
]
