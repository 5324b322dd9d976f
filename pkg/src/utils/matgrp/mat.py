'''
Exact square matrices over a FieldDesc.
'''

from typing import List

from utils.ff import FieldDesc, FieldElem
from utils.ff import linalg

from .error import DimensionMismatchError, SingularMatrixError

class Mat:
    __slots__ = ("field", "d", "raw")

    def __init__(self, field: FieldDesc, rows):
        self.field = field
        self.d = len(rows)
        self.raw = tuple(tuple(self._entry(v) for v in row) for row in rows)
        if any(len(row) != self.d for row in self.raw):
            raise DimensionMismatchError(self.d, [len(r) for r in self.raw])

    def _entry(self, v):
        if isinstance(v, FieldElem):
            self.field._check(v)
            return v.value
        return self.field(int(v)).value

    @classmethod
    def from_raw(cls, field: FieldDesc, raw) -> "Mat":
        m = cls.__new__(cls)
        m.field = field
        m.d = len(raw)
        m.raw = tuple(tuple(r) for r in raw)
        return m

    @classmethod
    def identity(cls, field: FieldDesc, d: int) -> "Mat":
        return cls.scalar(field, d, field.one)

    @classmethod
    def scalar(cls, field: FieldDesc, d: int, c: FieldElem) -> "Mat":
        return cls.from_raw(field, [[c.value if i == j else field._zero for j in range(d)] for i in range(d)])

    @classmethod
    def diag(cls, field: FieldDesc, values: List[FieldElem]) -> "Mat":
        d = len(values)
        return cls.from_raw(field, [[values[i].value if i == j else field._zero for j in range(d)] for i in range(d)])

    def __getitem__(self, ij) -> FieldElem:
        i, j = ij
        return FieldElem(self.field, self.raw[i][j])

    @property
    def rows(self) -> List[List[FieldElem]]:
        return [[FieldElem(self.field, v) for v in row] for row in self.raw]

    def _same(self, other: "Mat"):
        if other.field is not self.field or other.d != self.d:
            raise DimensionMismatchError(self, other)

    def __mul__(self, other):
        if isinstance(other, Mat):
            self._same(other)
            return Mat.from_raw(self.field, linalg.matmul(self.field, self.raw, other.raw))
        if isinstance(other, FieldElem):
            self.field._check(other)
            c = other.value
        else:
            c = self.field._embed_int(int(other))
        return Mat.from_raw(self.field, [[self.field._mul(c, v) for v in row] for row in self.raw])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __add__(self, other: "Mat"):
        self._same(other)
        f = self.field
        return Mat.from_raw(f, [[f._add(a, b) for a, b in zip(r, s)] for r, s in zip(self.raw, other.raw)])

    def __sub__(self, other: "Mat"):
        self._same(other)
        f = self.field
        return Mat.from_raw(f, [[f._sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.raw, other.raw)])

    def __neg__(self):
        f = self.field
        return Mat.from_raw(f, [[f._neg(a) for a in r] for r in self.raw])

    def __eq__(self, other):
        return isinstance(other, Mat) and other.field is self.field and other.raw == self.raw

    def __hash__(self):
        return hash((id(self.field), self.raw))

    def det(self) -> FieldElem:
        return FieldElem(self.field, linalg.determinant(self.field, self.raw))

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def inverse(self) -> "Mat":
        inv = linalg.inverse(self.field, self.raw)
        if inv is None:
            raise SingularMatrixError()
        return Mat.from_raw(self.field, inv)

    def power(self, n: int) -> "Mat":
        if n < 0:
            return self.inverse().power(-n)
        result = Mat.identity(self.field, self.d)
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def is_scalar(self) -> bool:
        f = self.field
        c = self.raw[0][0]
        return all(self.raw[i][j] == (c if i == j else f._zero) for i in range(self.d) for j in range(self.d))

    def map_entries(self, fn) -> "Mat":
        '''Apply fn (FieldElem -> FieldElem) to every entry; the result lives in fn's target field'''
        rows = [[fn(e) for e in row] for row in self.rows]
        return Mat(rows[0][0].field, rows)

    def to_ints(self) -> List[List[int]]:
        return [[self.field._to_int(v) for v in row] for row in self.raw]

    def __repr__(self):
        return "Mat({}, {})".format(self.field.name, self.to_ints())
