"""Numeric evaluation of every series used by the relations."""
from .frakt import eval_frakT_bruteforce, lerch_tail, two_sided_polylog
from .identities import IDENTITIES, check_identity
from .lattice_sums import LatticeSeriesSpec, convergence_guard, eval_zeta3
from .scalar import (
    DEFAULT_PRECISION,
    NumericValue,
    Precision,
    eval_ez2,
    eval_L4,
    eval_phi_alpha,
    eval_tornheim,
    eval_zeta,
)

__all__ = [
    "DEFAULT_PRECISION",
    "IDENTITIES",
    "LatticeSeriesSpec",
    "NumericValue",
    "Precision",
    "check_identity",
    "convergence_guard",
    "eval_L4",
    "eval_ez2",
    "eval_frakT_bruteforce",
    "eval_phi_alpha",
    "eval_tornheim",
    "eval_zeta",
    "eval_zeta3",
    "lerch_tail",
    "two_sided_polylog",
]
