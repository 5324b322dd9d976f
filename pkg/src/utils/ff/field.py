'''
Finite fields as towers of simple extensions over a prime field.

An element is kept as a raw value: an int for a prime field, and for an
extension step a tuple of raw base-field values (constant term first)
reduced modulo the step's monic modulus. FieldElem wraps a raw value with
the FieldDesc it belongs to; arithmetic between different FieldDesc objects
is refused, moving between fields goes through lift/descend or an Embedding.
'''

import functools
from typing import Any, Iterator, List

import numpy as np
from sympy import isprime

from .error import FieldMismatchError, NotInTowerError, ZeroInverseError

class FieldDesc:
    def __init__(self, p: int, base: "FieldDesc" = None, modulus=None, name: str = None):
        if base is None:
            assert isprime(p), "characteristic must be prime"
            self.p = p
            self.base = None
            self.modulus = None
            self.degree = 1
            self.order = p
            self._zero = 0
            self._one = 1
        else:
            assert base.p == p
            modulus = tuple(modulus)
            assert len(modulus) >= 2 and modulus[-1] == base._one, "modulus must be monic of degree >= 1"
            self.p = p
            self.base = base
            self.modulus = modulus
            self.degree = len(modulus) - 1
            self.order = base.order ** self.degree
            self._zero = (base._zero,) * self.degree
            self._one = (base._one,) + (base._zero,) * (self.degree - 1)
        self.name = name or "F_{}".format(self.order)

    def __repr__(self):
        return "FieldDesc({}, p={}, tower={})".format(self.name, self.p, [f.degree for f in self.tower()[1:]])

    ## Raw arithmetic ######################

    def _add(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        add = self.base._add
        return tuple(add(x, y) for x, y in zip(a, b))

    def _sub(self, a, b):
        if self.base is None:
            return (a - b) % self.p
        sub = self.base._sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        if self.base is None:
            return (-a) % self.p
        neg = self.base._neg
        return tuple(neg(x) for x in a)

    def _mul(self, a, b):
        if self.base is None:
            return (a * b) % self.p
        base = self.base
        bzero = base._zero
        n = self.degree
        prod = [bzero] * (2 * n - 1)
        for i, x in enumerate(a):
            if x == bzero:
                continue
            for j, y in enumerate(b):
                if y == bzero:
                    continue
                prod[i + j] = base._add(prod[i + j], base._mul(x, y))
        # Reduce from the top with the monic modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c == bzero:
                continue
            for i in range(n):
                prod[k - n + i] = base._sub(prod[k - n + i], base._mul(c, self.modulus[i]))
            prod[k] = bzero
        return tuple(prod[:n])

    def _scale(self, c, a):
        '''Multiply raw element a by raw base-field scalar c'''
        mul = self.base._mul
        return tuple(mul(c, x) for x in a)

    def _pow(self, a, n: int):
        if n < 0:
            return self._pow(self._inv(a), -n)
        if self.base is None:
            return pow(a, n, self.p)
        if a == self._zero:
            return self._one if n == 0 else self._zero
        n %= self.order - 1
        result = self._one
        square = a
        while n:
            if n & 1:
                result = self._mul(result, square)
            n >>= 1
            if n:
                square = self._mul(square, square)
        return result

    def _inv(self, a):
        if a == self._zero:
            raise ZeroInverseError(self.name)
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        return self._pow(a, self.order - 2)

    def _embed_int(self, n: int):
        '''Raw value of n*1'''
        if self.base is None:
            return n % self.p
        return (self.base._embed_int(n),) + (self.base._zero,) * (self.degree - 1)

    def _to_int(self, a) -> int:
        if self.base is None:
            return a
        value = 0
        border = self.base.order
        for x in reversed(a):
            value = value * border + self.base._to_int(x)
        return value

    def _from_int(self, n: int):
        if self.base is None:
            return n % self.p
        coeffs = []
        for _ in range(self.degree):
            n, r = divmod(n, self.base.order)
            coeffs.append(self.base._from_int(r))
        return tuple(coeffs)

    ## Elements ############################

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field is self:
                return value
            return self.lift(value)
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, self._embed_int(int(value)))
        return FieldElem(self, value)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, self._zero)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, self._one)

    @property
    def gen(self) -> "FieldElem":
        '''Class of the adjoined variable (for a degree-1 step, the root of the linear modulus)'''
        if self.base is None:
            return self.one
        if self.degree == 1:
            return FieldElem(self, (self.base._neg(self.modulus[0]),))
        return FieldElem(self, (self.base._zero, self.base._one) + (self.base._zero,) * (self.degree - 2))

    def from_int(self, n: int) -> "FieldElem":
        return FieldElem(self, self._from_int(n))

    def from_coeffs(self, coeffs: List["FieldElem"]) -> "FieldElem":
        '''Element sum(coeffs[i] * gen^i) with coefficients in the base field'''
        assert self.base is not None and len(coeffs) == self.degree
        raw = []
        for c in coeffs:
            if c.field is not self.base:
                raise FieldMismatchError(c.field.name, self.base.name)
            raw.append(c.value)
        return FieldElem(self, tuple(raw))

    def coeffs(self, x: "FieldElem") -> List["FieldElem"]:
        self._check(x)
        return [FieldElem(self.base, c) for c in x.value]

    def elements(self) -> Iterator["FieldElem"]:
        for n in range(self.order):
            yield self.from_int(n)

    def random_element(self, rng: np.random.Generator, nonzero: bool = False) -> "FieldElem":
        low = 1 if nonzero else 0
        return self.from_int(int(rng.integers(low, self.order)))

    def _check(self, x: "FieldElem"):
        if x.field is not self:
            raise FieldMismatchError(x.field.name, self.name)

    ## Tower ###############################

    def tower(self) -> List["FieldDesc"]:
        '''Fields from the prime field up to this one'''
        chain = []
        field = self
        while field is not None:
            chain.append(field)
            field = field.base
        return list(reversed(chain))

    def prime_field(self) -> "FieldDesc":
        return self.tower()[0]

    def in_tower(self, sub: "FieldDesc") -> bool:
        return any(f is sub for f in self.tower())

    def degree_over(self, sub: "FieldDesc") -> int:
        if not self.in_tower(sub):
            raise NotInTowerError(sub.name, self.name)
        degree = 1
        field = self
        while field is not sub:
            degree *= field.degree
            field = field.base
        return degree

    def lift(self, x: "FieldElem") -> "FieldElem":
        '''Image of an element of a tower subfield'''
        if not self.in_tower(x.field):
            raise NotInTowerError(x.field.name, self.name)
        steps = self.tower()
        raw = x.value
        for field in steps[steps.index(x.field) + 1:]:
            raw = (raw,) + (field.base._zero,) * (field.degree - 1)
        return FieldElem(self, raw)

    def descend(self, x: "FieldElem", sub: "FieldDesc") -> "FieldElem":
        '''Inverse of lift; raises ValueError if x is not in the image of sub'''
        self._check(x)
        if not self.in_tower(sub):
            raise NotInTowerError(sub.name, self.name)
        raw = x.value
        field = self
        while field is not sub:
            if any(c != field.base._zero for c in raw[1:]):
                raise ValueError("{} does not lie in the subfield {}".format(x, sub.name))
            raw = raw[0]
            field = field.base
        return FieldElem(sub, raw)

    def coords(self, x: "FieldElem", sub: "FieldDesc") -> list:
        '''Coordinates of x over a tower subfield, as raw sub values'''
        self._check(x)
        if not self.in_tower(sub):
            raise NotInTowerError(sub.name, self.name)
        return self._flatten(x.value, sub)

    def _flatten(self, raw, sub: "FieldDesc") -> list:
        if self is sub:
            return [raw]
        out = []
        for c in raw:
            out.extend(self.base._flatten(c, sub))
        return out

    ## Serialization #######################

    def to_json(self) -> dict:
        steps = []
        for field in self.tower()[1:]:
            steps.append({
                "degree": field.degree,
                "modulus": [field.base._to_int(c) for c in field.modulus],
            })
        return {"p": self.p, "order": self.order, "tower": steps}

    @staticmethod
    def from_json(data: dict) -> "FieldDesc":
        field = prime_field(int(data["p"]))
        for step in data["tower"]:
            field = FieldDesc(field.p, field, [field._from_int(int(c)) for c in step["modulus"]])
        return field


class FieldElem:
    __slots__ = ("field", "value")

    def __init__(self, field: FieldDesc, value: Any):
        self.field = field
        self.value = value

    def _raw(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise FieldMismatchError(self.field.name, other.field.name)
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field._embed_int(int(other))
        raise TypeError("Unsupported operand {!r}".format(other))

    def __add__(self, other):
        return FieldElem(self.field, self.field._add(self.value, self._raw(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field._sub(self.value, self._raw(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field._sub(self._raw(other), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field._neg(self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field._mul(self.value, self._raw(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field._mul(self.value, self.field._inv(self._raw(other))))

    def __rtruediv__(self, other):
        return FieldElem(self.field, self.field._mul(self._raw(other), self.field._inv(self.value)))

    def __pow__(self, n: int):
        return FieldElem(self.field, self.field._pow(self.value, int(n)))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field._inv(self.value))

    def is_zero(self) -> bool:
        return self.value == self.field._zero

    def is_one(self) -> bool:
        return self.value == self.field._one

    def to_int(self) -> int:
        return self.field._to_int(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return other.field is self.field and other.value == self.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.field._embed_int(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __repr__(self):
        return "{}({})".format(self.field.name, self.to_int())


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> FieldDesc:
    return FieldDesc(p)

def frobenius(x: FieldElem, base: FieldDesc, times: int = 1) -> FieldElem:
    '''x -> x^(|base|^times), the Frobenius of x's field over a tower subfield'''
    if not x.field.in_tower(base):
        raise NotInTowerError(base.name, x.field.name)
    if x.is_zero():
        return x
    exponent = pow(base.order, times, x.field.order - 1)
    return x ** exponent

def in_subfield(x: FieldElem, sub: FieldDesc) -> bool:
    return frobenius(x, sub) == x

def norm(x: FieldElem, top: FieldDesc, base: FieldDesc) -> FieldElem:
    '''Galois norm of x from top down to base, returned as an element of base'''
    top._check(x)
    degree = top.degree_over(base)
    result = top.one
    conj = x
    for _ in range(degree):
        result = result * conj
        conj = frobenius(conj, base)
    return top.descend(result, base)

def trace(x: FieldElem, top: FieldDesc, base: FieldDesc) -> FieldElem:
    '''Galois trace of x from top down to base, returned as an element of base'''
    top._check(x)
    degree = top.degree_over(base)
    result = top.zero
    conj = x
    for _ in range(degree):
        result = result + conj
        conj = frobenius(conj, base)
    return top.descend(result, base)
