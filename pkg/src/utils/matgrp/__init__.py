from .mat import Mat
from .proj import ProjMatrix, LinMatrix, proj_canonical, lin_matrix, matmul_codes, canonical_codes, det_codes
from .group import GroupEnum, generate_group, DEFAULT_CAP
from .ops import (
    QuotientTag,
    Classification,
    Coverage,
    order_gl,
    order_pgl,
    order_sl,
    order_psl,
    classify_quotient,
    det_power_class,
    det_square_class,
    product_coverage,
    conjugate_orbits,
    double_coset,
)
from .standard import selberg_pair
from .error import SingularMatrixError, DimensionMismatchError, IncompleteEnumerationError, NotInGroupError
