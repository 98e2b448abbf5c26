"""Volterra-type special functions with certified error bounds, plus an
inequality lab that checks their known inequalities at concrete parameters."""
from .errors import DomainError, PrecisionLossError
from .quad import EvalResult, IntegrandSpec
from .volterra import (VolterraParams, f_derivative, g, g_star, k_beta, mu, mu_beta,
                       mu_lower, mu_upper, nu, nu_alpha, nu_neg, nu_neg_complement)

__all__ = [
    "DomainError", "PrecisionLossError", "EvalResult", "IntegrandSpec", "VolterraParams",
    "mu", "nu", "nu_alpha", "mu_beta", "mu_upper", "mu_lower", "g", "g_star",
    "f_derivative", "k_beta", "nu_neg", "nu_neg_complement",
]
