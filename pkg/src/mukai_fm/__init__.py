"""Exact Mukai-lattice computations for Fourier-Mukai transforms on
Picard-rank-one abelian and K3 surfaces."""

from .errors import HypothesisViolation, InvalidSetup, MukaiError
from .lattice import (
    Kind,
    MukaiVector,
    Surface,
    canonical_form,
    deg_rel,
    dual,
    from_chern,
    hilbert_index,
    is_isotropic,
    is_primitive,
    moduli_dim,
    mu_rel,
    pairing,
    rk_rel,
    to_chern,
    twist,
    v_squared,
)
from .abelian import classify_section2, fm_abelian_H, g_transform_H, proof_bounds
from .general import (
    FmSetup,
    IntMatrix3,
    TheoremCase,
    TheoremVerdict,
    classify_appendix,
    fm_apply,
    fm_inverse_apply,
    fm_matrix,
    g_vectors,
    lemma_deg_identity,
    make_setup,
    reflection,
    theorem_map,
)

__version__ = "0.1.0"
