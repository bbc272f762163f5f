"""Exact computation of the structure maps of the Hopf algebroid classifying
A-typical one-dimensional formal A-module laws over a p-adic number ring A."""

__version__ = "0.1.0"

from .coeff import KElement, RingParams, k_arith, make_ring, pi_valuation, reduce_mod_pi
from .gpoly import GradedPoly, grade, lex_compare, poly_arith
from .sequences import Seq, indexed_monomial, pi_A_seq, seq_stats
from .series import PowerSeries, QTypicalSeries, series_reverse, series_substitute
from .witt import classical_witt, generalized_witt
from .universal import (
    LogSeries,
    araki_logs,
    closed_form_logs,
    fgl_sum,
    generator_conversion,
    hazewinkel_logs,
    negation,
    strict_iso_coeffs,
    structured_formal_sum,
)
from .hopf import (
    coproduct_mod_In,
    coproduct_t,
    conjugation_identity,
    counit,
    eta_R_closed,
    eta_R_logs,
    eta_R_v,
    hopf_axiom_suite,
    verify_invariance,
)
from .stabilizer import (
    StabAlgebra,
    StabElement,
    b_element,
    stab_coassoc_check,
    stab_coproduct,
    stab_normal_form,
    stab_presentation,
    thickening_check,
)
