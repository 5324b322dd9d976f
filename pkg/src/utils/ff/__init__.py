from .field import FieldDesc, FieldElem, prime_field, frobenius, in_subfield, norm, trace
from .construct import (
    make_extension,
    irreducible_ideal_poly,
    primitive_element,
    discrete_log,
    find_normal_basis_generator,
    solve_norm_equation,
    conjugate_rank,
)
from .embedding import Embedding, find_embedding
from .table import FieldTable, field_table
from .error import (
    FieldMismatchError,
    NotInTowerError,
    ZeroInverseError,
    InadmissibleIdealError,
    ZeroNormError,
    EmbeddingNotFoundError,
)
