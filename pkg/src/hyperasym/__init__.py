"""Symbolic-numeric engine for confluent hypergeometric asymptotics,
analytic continuation, and exact arithmetic in the associated constant ring."""

__version__ = "0.1.0"

from .cyclo import CycloNumber, e2pi_cyclo, sin_pi, cos_pi
from .exact import HyperParams, galochkin_classify, group_parameters, nu, pochhammer
from .hring import (HAtom, HElement, h_eval, h_gamma, h_gamma_derivative,
                    h_invert_gamma, h_normalize, h_polylog, h_psi, h_zeta)
from .numerics import BigComplex, n_euler_gamma, n_gamma, n_hurwitz, n_pFq, n_polylog, n_psi_k
