"""Binary field and sparse polynomial arithmetic."""

from .field import (
    F2, FieldContext, FieldElement, FieldMismatchError, EmbeddingError,
    get_field, embed, embed_value, additive_kernel, fe_mul, frobenius, parse_element,
)
from .poly import (
    ZZ, IntegerRing, MultiPoly, NonExactDivisionError, SingularMatrixError, RingMismatchError,
    mp_add, mp_mul, mp_eval, mp_partial, mp_subst_linear, mp_exact_div, mp_det3,
    mp_reduce_mod2, parse_poly, to_text, variables,
)
