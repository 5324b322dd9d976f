'''
Seeded searches that build the pieces of a tower: irreducible moduli,
multiplicative generators, normal-basis generators and norm preimages.
Every search takes an explicit seed so a tower is rebuilt bit-for-bit.
'''

import logging
import math
from typing import List

import numpy as np
from sympy import factorint

from .error import InadmissibleIdealError, ZeroNormError
from .field import FieldDesc, FieldElem, frobenius, norm
from .linalg import rank
from .poly import evaluate, is_irreducible

def _random_monic(rng: np.random.Generator, base: FieldDesc, degree: int) -> list:
    coeffs = [base._from_int(int(rng.integers(base.order))) for _ in range(degree)]
    return coeffs + [base._one]

def make_extension(base: FieldDesc, degree: int, seed: int = 0) -> FieldDesc:
    assert degree >= 1, "extension degree must be positive"
    if degree == 1:
        return base
    rng = np.random.default_rng(seed)
    tries = 0
    while True:
        tries += 1
        coeffs = _random_monic(rng, base, degree)
        if coeffs[0] == base._zero:
            continue
        if is_irreducible(base, coeffs):
            field = FieldDesc(base.p, base, coeffs)
            logging.debug("Built {} over {} after {} candidates".format(field.name, base.name, tries))
            return field

def irreducible_ideal_poly(Fq: FieldDesc, e: int, seed: int = 0) -> List[FieldElem]:
    '''
    Monic irreducible g of degree e over Fq with g(0) != 0 and g(-1) != 0,
    returned as coefficients (constant term first).
    '''
    assert e >= 1
    if e == 1 and Fq.order == 2:
        raise InadmissibleIdealError(Fq.order, e)
    rng = np.random.default_rng(seed)
    minus_one = Fq._neg(Fq._one)
    while True:
        coeffs = _random_monic(rng, Fq, e)
        if evaluate(Fq, coeffs, Fq._zero) == Fq._zero:
            continue
        if evaluate(Fq, coeffs, minus_one) == Fq._zero:
            continue
        if is_irreducible(Fq, coeffs):
            return [FieldElem(Fq, c) for c in coeffs]

def _is_generator(field: FieldDesc, raw, primes) -> bool:
    m = field.order - 1
    return all(field._pow(raw, m // r) != field._one for r in primes)

def primitive_element(field: FieldDesc, seed: int = None) -> FieldElem:
    '''
    Generator of the multiplicative group. Without a seed the smallest one in
    integer encoding is returned.
    '''
    primes = list(factorint(field.order - 1))
    if seed is not None:
        rng = np.random.default_rng(seed)
        for _ in range(10 * field.order):
            raw = field._from_int(int(rng.integers(1, field.order)))
            if _is_generator(field, raw, primes):
                return FieldElem(field, raw)
    for n in range(1, field.order):
        raw = field._from_int(n)
        if _is_generator(field, raw, primes):
            return FieldElem(field, raw)
    raise AssertionError("multiplicative group of {} has no generator".format(field.name))

def discrete_log(x: FieldElem, g: FieldElem, order: int = None) -> int:
    '''Baby-step giant-step: k with g^k = x, where g has the given order'''
    field = x.field
    if g.field is not field:
        g = field(g)
    order = order or field.order - 1
    step = math.isqrt(order) + 1
    baby = {}
    acc = field._one
    for j in range(step):
        baby.setdefault(acc, j)
        acc = field._mul(acc, g.value)
    giant = field._inv(field._pow(g.value, step))
    gamma = x.value
    for i in range(step + 1):
        if gamma in baby:
            return (i * step + baby[gamma]) % order
        gamma = field._mul(gamma, giant)
    raise ValueError("{} is not a power of {}".format(x, g))

def conjugate_rank(xi: FieldElem, top: FieldDesc, base: FieldDesc, automorphism=None) -> int:
    '''Rank over base of the orbit xi, phi(xi), ... under the given automorphism (default: Frobenius)'''
    d = top.degree_over(base)
    automorphism = automorphism or (lambda v: frobenius(v, base))
    rows = []
    conj = xi
    for _ in range(d):
        rows.append(top.coords(conj, base))
        conj = automorphism(conj)
    return rank(base, rows)

def find_normal_basis_generator(top: FieldDesc, base: FieldDesc, seed: int = 0) -> FieldElem:
    d = top.degree_over(base)
    if d == 1:
        return top.one
    rng = np.random.default_rng(seed)
    for _ in range(10 * top.order):
        xi = top.random_element(rng, nonzero=True)
        if conjugate_rank(xi, top, base) == d:
            return xi
    logging.warning("Random normal basis search over {} exhausted; scanning".format(top.name))
    for n in range(1, top.order):
        xi = top.from_int(n)
        if conjugate_rank(xi, top, base) == d:
            return xi
    raise AssertionError("no normal basis generator for {}/{}".format(top.name, base.name))

def solve_norm_equation(top: FieldDesc, base: FieldDesc, a: FieldElem, seed: int = 0) -> FieldElem:
    '''c in top with norm(c, top, base) == a'''
    if a.field is top:
        a = top.descend(a, base)
    base._check(a)
    if a.is_zero():
        raise ZeroNormError(top.name)
    g = primitive_element(top, seed)
    # the norm of a generator generates base*
    h = norm(g, top, base)
    k = discrete_log(a, h, base.order - 1)
    return g ** k
