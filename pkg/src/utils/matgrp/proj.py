'''
Hashable group elements over a field table: ProjMatrix (a class in PGL_d,
stored with its first nonzero entry in row-major order scaled to 1) and
LinMatrix (an honest element of GL_d). Entries are FieldTable codes, and
the *_codes helpers work on whole arrays of flattened matrices at once.
'''

from typing import List

import numpy as np

from utils.ff import FieldTable, field_table

from .error import DimensionMismatchError, SingularMatrixError
from .mat import Mat

def matmul_codes(table: FieldTable, a: np.ndarray, b: np.ndarray, d: int) -> np.ndarray:
    '''Row-wise products of flattened d x d code matrices (broadcasting a single b)'''
    a = np.asarray(a, dtype=np.int64).reshape(-1, d, d)
    b = np.asarray(b, dtype=np.int64).reshape(-1, d, d)
    out = np.zeros((max(len(a), len(b)), d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            acc = table.mul(a[:, i, 0], b[:, 0, j])
            for k in range(1, d):
                acc = table.add(acc, table.mul(a[:, i, k], b[:, k, j]))
            out[:, i, j] = acc
    return out.reshape(-1, d * d)

def canonical_codes(table: FieldTable, codes: np.ndarray) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    nonzero = codes != 0
    if not nonzero.any(axis=1).all():
        raise SingularMatrixError("zero matrix")
    first = nonzero.argmax(axis=1)
    lead = codes[np.arange(len(codes)), first]
    return table.mul(codes, table.inv(lead)[:, None])

def det_codes(table: FieldTable, codes: np.ndarray, d: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64).reshape(-1, d * d)
    mul, add, sub = table.mul, table.add, table.sub
    if d == 1:
        return codes[:, 0].copy()
    if d == 2:
        return sub(mul(codes[:, 0], codes[:, 3]), mul(codes[:, 1], codes[:, 2]))
    if d == 3:
        c = [codes[:, i] for i in range(9)]
        pos = add(add(mul(mul(c[0], c[4]), c[8]), mul(mul(c[1], c[5]), c[6])), mul(mul(c[2], c[3]), c[7]))
        neg = add(add(mul(mul(c[2], c[4]), c[6]), mul(mul(c[0], c[5]), c[7])), mul(mul(c[1], c[3]), c[8]))
        return sub(pos, neg)
    out = np.empty(len(codes), dtype=np.int64)
    for n, row in enumerate(codes):
        out[n] = table.to_code(_codes_to_mat(table, row, d).det())
    return out

def _codes_to_mat(table: FieldTable, codes, d: int) -> Mat:
    raw = [[table.element(codes[i * d + j]).value for j in range(d)] for i in range(d)]
    return Mat.from_raw(table.field, raw)


class ProjMatrix:
    projective = True
    __slots__ = ("table", "d", "codes")

    def __init__(self, table: FieldTable, d: int, codes):
        self.table = table
        self.d = d
        self.codes = tuple(int(c) for c in codes)

    @classmethod
    def from_codes(cls, table: FieldTable, d: int, codes) -> "ProjMatrix":
        return cls(table, d, canonical_codes(table, np.asarray(codes).reshape(1, -1))[0])

    @classmethod
    def identity(cls, table: FieldTable, d: int) -> "ProjMatrix":
        return cls(table, d, [1 if i == j else 0 for i in range(d) for j in range(d)])

    @property
    def field(self):
        return self.table.field

    def array(self) -> np.ndarray:
        return np.asarray(self.codes, dtype=np.int64)

    def to_mat(self) -> Mat:
        return _codes_to_mat(self.table, self.codes, self.d)

    def _same(self, other: "ProjMatrix"):
        if type(other) is not type(self) or other.table is not self.table or other.d != self.d:
            raise DimensionMismatchError(self, other)

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        self._same(other)
        prod = matmul_codes(self.table, self.array(), other.array(), self.d)[0]
        return type(self).from_codes(self.table, self.d, prod)

    def inverse(self) -> "ProjMatrix":
        return type(self).from_mat(self.to_mat().inverse())

    def power(self, n: int) -> "ProjMatrix":
        if n < 0:
            return self.inverse().power(-n)
        result = type(self).identity(self.table, self.d)
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def conjugate(self, h: "ProjMatrix") -> "ProjMatrix":
        '''h self h^-1'''
        return h * self * h.inverse()

    def det_code(self) -> int:
        return int(det_codes(self.table, self.array(), self.d)[0])

    def is_identity(self) -> bool:
        return self == type(self).identity(self.table, self.d)

    def entries_int(self) -> List[List[int]]:
        return self.to_mat().to_ints()

    @classmethod
    def from_mat(cls, M: Mat) -> "ProjMatrix":
        return proj_canonical(M) if cls.projective else lin_matrix(M)

    def __eq__(self, other):
        return (isinstance(other, ProjMatrix) and other.projective == self.projective
                and other.table is self.table and other.codes == self.codes)

    def __hash__(self):
        return hash((self.projective, id(self.table), self.codes))

    def __repr__(self):
        return "{}({}, {})".format(type(self).__name__, self.field.name, self.entries_int())


class LinMatrix(ProjMatrix):
    '''Element of GL_d, no scalar normalization'''
    projective = False
    __slots__ = ()

    @classmethod
    def from_codes(cls, table: FieldTable, d: int, codes) -> "LinMatrix":
        return cls(table, d, codes)


def proj_canonical(M: Mat) -> ProjMatrix:
    if not M.is_invertible():
        raise SingularMatrixError()
    table = field_table(M.field)
    codes = [table.code_of_raw(v) for row in M.raw for v in row]
    return ProjMatrix.from_codes(table, M.d, codes)

def lin_matrix(M: Mat) -> LinMatrix:
    if not M.is_invertible():
        raise SingularMatrixError()
    table = field_table(M.field)
    return LinMatrix(table, M.d, [table.code_of_raw(v) for row in M.raw for v in row])
