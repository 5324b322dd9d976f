from typing import Tuple

from utils.ff import FieldDesc

from .mat import Mat
from .proj import ProjMatrix, lin_matrix, proj_canonical

def selberg_pair(field: FieldDesc, projective: bool = True) -> Tuple[ProjMatrix, ProjMatrix]:
    '''A = (1 1; 0 1) and B = (0 1; -1 0) with entries in the prime subfield of field'''
    A = Mat(field, [[1, 1], [0, 1]])
    B = Mat(field, [[0, 1], [-1, 0]])
    convert = proj_canonical if projective else lin_matrix
    return convert(A), convert(B)
