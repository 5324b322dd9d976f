'''
Dense univariate polynomials over a FieldDesc, as lists of raw coefficients
(constant term first). Only what the tower constructions need.
'''

from typing import List, Tuple

from sympy import primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irred_p_rabin

from .field import FieldDesc

def trim(field: FieldDesc, f: list) -> list:
    f = list(f)
    while f and f[-1] == field._zero:
        f.pop()
    return f

def degree(field: FieldDesc, f: list) -> int:
    return len(trim(field, f)) - 1

def add(field: FieldDesc, f: list, g: list) -> list:
    n = max(len(f), len(g))
    f = list(f) + [field._zero] * (n - len(f))
    g = list(g) + [field._zero] * (n - len(g))
    return trim(field, [field._add(a, b) for a, b in zip(f, g)])

def sub(field: FieldDesc, f: list, g: list) -> list:
    return add(field, f, [field._neg(b) for b in g])

def mul(field: FieldDesc, f: list, g: list) -> list:
    f, g = trim(field, f), trim(field, g)
    if not f or not g:
        return []
    prod = [field._zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == field._zero:
            continue
        for j, b in enumerate(g):
            prod[i + j] = field._add(prod[i + j], field._mul(a, b))
    return trim(field, prod)

def divmod_poly(field: FieldDesc, f: list, g: list) -> Tuple[list, list]:
    g = trim(field, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(field, f)
    lead_inv = field._inv(g[-1])
    quot = [field._zero] * max(len(rem) - len(g) + 1, 0)
    while len(rem) >= len(g):
        shift = len(rem) - len(g)
        c = field._mul(rem[-1], lead_inv)
        quot[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = field._sub(rem[shift + i], field._mul(c, b))
        rem = trim(field, rem)
    return trim(field, quot), rem

def mod(field: FieldDesc, f: list, g: list) -> list:
    return divmod_poly(field, f, g)[1]

def powmod(field: FieldDesc, f: list, n: int, g: list) -> list:
    result = [field._one]
    base = mod(field, f, g)
    while n:
        if n & 1:
            result = mod(field, mul(field, result, base), g)
        n >>= 1
        if n:
            base = mod(field, mul(field, base, base), g)
    return mod(field, result, g)

def gcd(field: FieldDesc, f: list, g: list) -> list:
    '''Monic gcd'''
    f, g = trim(field, f), trim(field, g)
    while g:
        f, g = g, mod(field, f, g)
    if not f:
        return []
    lead_inv = field._inv(f[-1])
    return [field._mul(lead_inv, c) for c in f]

def evaluate(field: FieldDesc, f: list, x) -> object:
    acc = field._zero
    for c in reversed(f):
        acc = field._add(field._mul(acc, x), c)
    return acc

def is_irreducible(field: FieldDesc, f: list) -> bool:
    '''Rabin's test: f | x^(Q^n) - x and gcd(f, x^(Q^(n/r)) - x) = 1 for every prime r | n'''
    f = trim(field, f)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    if field.base is None:
        # sympy wants the dense list leading coefficient first
        return gf_irred_p_rabin([int(c) for c in reversed(f)], field.p, ZZ)
    x = [field._zero, field._one]
    frob = [x]
    for _ in range(n):
        frob.append(powmod(field, frob[-1], field.order, f))
    if sub(field, frob[n], mod(field, x, f)):
        return False
    for r in primefactors(n):
        h = sub(field, frob[n // r], x)
        if degree(field, gcd(field, h, f)) != 0:
            return False
    return True

def as_ints(field: FieldDesc, f: list) -> List[int]:
    return [field._to_int(c) for c in f]
