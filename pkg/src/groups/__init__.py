"""Matrix groups over exact rings.

Matrices, elementary words, decomposition of determinant-one matrices into
elementary words, closure search for the GE property, and enumeration of
small special linear and symplectic groups.
"""

from .matrix import (  # noqa: F401
    RMatrix,
    adjugate,
    coerce,
    det,
    form,
    inverse,
    is_symplectic,
    omega,
    ring_from_dict,
    ring_to_dict,
    symplectic_elementary,
    symplectic_inverse,
)
from .words import ElemFactor, ElemWord, apply_word, diag_word, transposition_word, word_to_matrix  # noqa: F401
from .decompose import elementary_decompose, gl_decompose  # noqa: F401
from .enumeration import (  # noqa: F401
    enumerate_sl,
    enumerate_sp,
    random_sl,
    random_sl_stream,
    random_sp,
    random_sp_stream,
    random_word,
)
from .closure import ClosureResult, elementary_generators, ge_closure, is_ge_ring  # noqa: F401
