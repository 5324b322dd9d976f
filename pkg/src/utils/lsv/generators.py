'''
Matrix images of the algebra elements and the generating sets built from them.
'''

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from utils.ff import FieldElem, ZeroInverseError, in_subfield
from utils.matgrp import (
    Mat,
    ProjMatrix,
    SingularMatrixError,
    conjugate_orbits,
    det_power_class,
    det_square_class,
    proj_canonical,
    selberg_pair,
)

from .algebra import AlgebraSpec, build_spec, torus_generator
from .error import ConstructionError, DegenerateIdealError, UnsupportedConfigError

@dataclass
class GenSetS:
    S: List[ProjMatrix]
    C: ProjMatrix
    T: List[ProjMatrix]
    T1: List[ProjMatrix]
    orbits: List[List[ProjMatrix]]
    C_prime: Optional[ProjMatrix]

    def to_json(self) -> dict:
        return {
            "S": [s.entries_int() for s in self.S],
            "C": self.C.entries_int(),
            "C_prime": self.C_prime.entries_int() if self.C_prime is not None else None,
            "torus_order": len(self.T),
            "T1_order": len(self.T1),
            "orbit_sizes": [len(o) for o in self.orbits],
        }

def _matrix_of(spec: AlgebraSpec, fn) -> Mat:
    '''Column j holds the coordinates of fn(basis[j])'''
    cols = [spec.coordinates(fn(b)) for b in spec.basis]
    return Mat.from_raw(spec.K, [[cols[j][i] for j in range(spec.d)] for i in range(spec.d)])

def rep_torus(spec: AlgebraSpec, u: FieldElem) -> Mat:
    '''Multiplication by u in L0* acting on L'''
    if u.is_zero():
        raise ZeroInverseError(spec.L0.name)
    image = spec.emb(u)
    return _matrix_of(spec, lambda v: image * v)

def rep_z(spec: AlgebraSpec) -> Mat:
    return _matrix_of(spec, lambda v: spec.c * spec.tau(v))

def gen_b_matrix(spec: AlgebraSpec) -> Mat:
    '''I + z^-1 with z^-1 = z^(d-1) / (1+y)'''
    K = spec.K
    z_inv = rep_z(spec).power(spec.d - 1) * (spec.y_img + 1).inverse()
    return Mat.identity(K, spec.d) + z_inv

def gen_b(spec: AlgebraSpec) -> ProjMatrix:
    try:
        return proj_canonical(gen_b_matrix(spec))
    except SingularMatrixError:
        raise DegenerateIdealError(spec.q, spec.d, spec.e, spec.seed)

def torus(spec: AlgebraSpec) -> Tuple[List[Mat], List[ProjMatrix]]:
    '''rep_torus of the coset representatives g0^k, 0 <= k < (q^d-1)/(q-1)'''
    g0 = torus_generator(spec)
    t1 = rep_torus(spec, g0)
    mats = [Mat.identity(spec.K, spec.d)]
    for _ in range(spec.torus_order - 1):
        mats.append(mats[-1] * t1)
    return mats, [proj_canonical(m) for m in mats]

def gens_S(spec: AlgebraSpec) -> GenSetS:
    b_mat = gen_b_matrix(spec)
    C = gen_b(spec)
    mats, T = torus(spec)

    # torus entries lie in F_q
    for m in mats:
        if not all(in_subfield(x, spec.K.base) for row in m.rows for x in row):
            raise ConstructionError("torus entries in F_q")

    S = [proj_canonical(u * b_mat * u.inverse()) for u in mats]
    if len(set(S)) != len(S):
        raise ConstructionError("distinct generators", "{} classes for {} cosets".format(len(set(S)), len(S)))
    if spec.d == 2 and set(S) != {s.inverse() for s in S}:
        raise ConstructionError("symmetric set", "S != S^-1 for d = 2")
    if spec.d > 2 and set(S) & {s.inverse() for s in S}:
        raise ConstructionError("disjoint inverses", "S meets S^-1 for d = {}".format(spec.d))
    conjugates = {C.conjugate(t) for t in T}
    if conjugates != set(S):
        raise ConstructionError("T-conjugacy", "S is not the T-orbit of C")

    if spec.d == 2:
        T1 = [t for t in T if det_square_class(t)]
    else:
        T1 = [t for t in T if det_power_class(t) == 0]
    orbits = conjugate_orbits(S, T1)
    if len(orbits) > 2 and spec.d == 2:
        raise ConstructionError("T1 orbits", "{} orbits of S under T1".format(len(orbits)))
    C_prime = orbits[1][0] if len(orbits) > 1 else None
    logging.info("Generating set: |S| = {}, |T| = {}, |T1| = {}, orbits {}".format(
        len(S), len(T), len(T1), [len(o) for o in orbits]))
    return GenSetS(S=S, C=C, T=T, T1=T1, orbits=orbits, C_prime=C_prime)

def trivial_eigs(d: int) -> Tuple[float, ...]:
    '''{cos(2 pi k / d)}, the real parts of the d-th roots of unity, descending'''
    assert d >= 2
    values = {round(float(np.cos(2 * np.pi * k / d)), 12) + 0.0 for k in range(d)}
    return tuple(sorted(values, reverse=True))

def abcc_gens(p: int, e: int, seed: int = 0) -> List[ProjMatrix]:
    '''[A, B, C, C'] over K = F_{p^e}; C' is left out when S has a single T1-orbit'''
    return abcc_data(p, e, seed)[2]

def abcc_data(p: int, e: int, seed: int = 0) -> Tuple[AlgebraSpec, GenSetS, List[ProjMatrix]]:
    if e % 2 == 0:
        raise UnsupportedConfigError("e = {} must be odd".format(e))
    if p ** e < 4:
        raise UnsupportedConfigError("p^e = {} must be at least 4".format(p ** e))
    spec = build_spec(p, 2, e, seed)
    gens = gens_S(spec)
    A, B = selberg_pair(spec.K)
    out = [A, B, gens.C]
    if gens.C_prime is not None:
        out.append(gens.C_prime)
    return spec, gens, out
