'''
Log/Zech-logarithm tables for bulk arithmetic over a small field.

Elements are coded as integers: 0 is zero and k + 1 is g^k for the
smallest primitive element g. All operations accept numpy arrays of codes
and are vectorized, which is what group enumeration runs on.
'''

import functools

import numpy as np

from .construct import primitive_element
from .field import FieldDesc, FieldElem

class FieldTable:
    def __init__(self, field: FieldDesc):
        self.field = field
        self.order = field.order
        self.m = field.order - 1
        gen = primitive_element(field)
        self.gen = gen

        powers = []
        raw = field._one
        for _ in range(self.m):
            powers.append(raw)
            raw = field._mul(raw, gen.value)
        self._raw = [field._zero] + powers
        self._code = {r: i for i, r in enumerate(self._raw)}

        zech = np.zeros(self.m, dtype=np.int64)
        for k, r in enumerate(powers):
            zech[k] = self._code[field._add(field._one, r)]
        self.zech = zech
        self.neg_log = (self._code[field._neg(field._one)] - 1)
        self.one = 1

    def to_code(self, x: FieldElem) -> int:
        self.field._check(x)
        return self._code[x.value]

    def code_of_raw(self, raw) -> int:
        return self._code[raw]

    def element(self, code: int) -> FieldElem:
        return FieldElem(self.field, self._raw[int(code)])

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = (a + b - 2) % self.m + 1
        return np.where((a == 0) | (b == 0), 0, out)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == 0, 0, (a - 1 + self.neg_log) % self.m + 1)

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a_nz = np.maximum(a, 1)
        b_nz = np.maximum(b, 1)
        z = self.zech[(b_nz - a_nz) % self.m]
        out = np.where(z == 0, 0, (a_nz - 1 + z - 1) % self.m + 1)
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("zero code has no inverse in {}".format(self.field.name))
        return (-(a - 1)) % self.m + 1

    def power(self, a, n: int):
        a = np.asarray(a, dtype=np.int64)
        if n == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, ((a - 1) * n) % self.m + 1)

    def power_class(self, a, m: int):
        '''Class of a nonzero code in F*/(F*)^m, for m dividing |F*|'''
        a = np.asarray(a, dtype=np.int64)
        return (a - 1) % m

    def is_square(self, a):
        if self.order % 2 == 0:
            return np.ones_like(np.asarray(a), dtype=bool)
        return self.power_class(a, 2) == 0


@functools.lru_cache(maxsize=None)
def field_table(field: FieldDesc) -> FieldTable:
    return FieldTable(field)
