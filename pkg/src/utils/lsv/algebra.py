'''
Data of the split cyclic algebra over R/I.

For coprime d and e the residue field K = F_q[y]/(g) of degree e and
L0 = F_{q^d} combine to L = F_{q^de}. The algebra acts on L viewed as a
d-dimensional K-space: L0 by multiplication and z by v -> c * tau(v), where
tau is the automorphism of L/K restricting to the q-Frobenius on L0 and
N_{L/K}(c) = 1 + y. Matrices are written in the K-basis tau^i(xi0).
'''

import logging
import math
from dataclasses import dataclass, field as dc_field
from typing import List

from sympy import factorint

from utils.ff import (
    Embedding,
    FieldDesc,
    FieldElem,
    FieldTable,
    conjugate_rank,
    field_table,
    find_embedding,
    find_normal_basis_generator,
    frobenius,
    irreducible_ideal_poly,
    make_extension,
    norm,
    prime_field,
    primitive_element,
    solve_norm_equation,
)
from utils.ff import linalg

from .error import ConstructionError, UnsupportedConfigError

@dataclass(frozen=True)
class AlgebraSpec:
    q: int
    d: int
    e: int
    seed: int
    Fq: FieldDesc
    g: List[FieldElem]
    K: FieldDesc
    y_img: FieldElem
    L0: FieldDesc
    xi0: FieldElem
    L: FieldDesc
    emb: Embedding
    t: int
    c: FieldElem
    basis: List[FieldElem] = dc_field(repr=False)
    basis_inv: list = dc_field(repr=False)
    table: FieldTable = dc_field(repr=False)

    @property
    def p(self) -> int:
        return self.Fq.p

    @property
    def torus_order(self) -> int:
        return (self.q ** self.d - 1) // (self.q - 1)

    def phi(self, u: FieldElem) -> FieldElem:
        '''q-Frobenius of L0'''
        return frobenius(u, self.Fq)

    def tau(self, v: FieldElem) -> FieldElem:
        return frobenius(v, self.K, self.t)

    def coordinates(self, v: FieldElem) -> list:
        '''Raw K-coordinates of v in the basis tau^i(xi0)'''
        coords = self.L.coords(v, self.K)
        K = self.K
        out = []
        for j in range(self.d):
            acc = K._zero
            for k, a in enumerate(coords):
                acc = K._add(acc, K._mul(a, self.basis_inv[k][j]))
            out.append(acc)
        return out

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "e": self.e,
            "seed": self.seed,
            "ideal_poly": [c.to_int() for c in self.g],
            "K": self.K.to_json(),
            "L0": self.L0.to_json(),
            "L": self.L.to_json(),
            "y_img": self.y_img.to_int(),
            "xi0": self.xi0.to_int(),
            "embedding_image": self.emb.image.to_int(),
            "t": self.t,
            "c": self.c.to_int(),
        }

    @staticmethod
    def from_json(data: dict) -> "AlgebraSpec":
        '''Rebuild from the recorded parameters and check the towers match'''
        spec = build_spec(int(data["q"]), int(data["d"]), int(data["e"]), int(data["seed"]))
        recorded = {k: data[k] for k in ("ideal_poly", "K", "L0", "L", "xi0", "c") if k in data}
        rebuilt = {k: v for k, v in spec.to_json().items() if k in recorded}
        if rebuilt != recorded:
            raise ConstructionError("reproduce", "rebuilt spec differs from the recorded one")
        return spec


def base_field(q: int, seed: int = 0) -> FieldDesc:
    factors = factorint(q)
    if len(factors) != 1:
        raise UnsupportedConfigError("q = {} is not a prime power".format(q))
    (p, f), = factors.items()
    return make_extension(prime_field(p), f, seed)

def build_spec(q: int, d: int, e: int, seed: int = 0) -> AlgebraSpec:
    if d < 2:
        raise UnsupportedConfigError("d = {} must be at least 2".format(d))
    if e < 1:
        raise UnsupportedConfigError("e = {} must be positive".format(e))
    if math.gcd(d, e) != 1:
        raise UnsupportedConfigError("gcd(d, e) = gcd({}, {}) != 1".format(d, e))
    Fq = base_field(q, seed)

    g = irreducible_ideal_poly(Fq, e, seed)
    K = FieldDesc(Fq.p, Fq, [c.value for c in g], name="K_{}".format(Fq.order ** e))
    y_img = K.gen
    if y_img.is_zero() or (y_img + 1).is_zero():
        raise ConstructionError("ideal", "y or 1+y vanishes in R/I")

    L0 = make_extension(Fq, d, seed)
    xi0 = find_normal_basis_generator(L0, Fq, seed)
    L = make_extension(K, d, seed)
    emb = find_embedding(L0, L)

    t = pow(e, -1, d)
    tau = lambda v: frobenius(v, K, t)
    xi = emb(xi0)
    if tau(xi) != emb(frobenius(xi0, Fq)):
        raise ConstructionError("tau restricts to phi")
    if conjugate_rank(xi, L, K, automorphism=tau) != d:
        raise ConstructionError("K-basis", "tau-orbit of xi0 is not independent over K")

    basis = [xi]
    for _ in range(d - 1):
        basis.append(tau(basis[-1]))
    basis_inv = linalg.inverse(K, [L.coords(b, K) for b in basis])

    one_plus_y = L.lift(y_img + 1)
    c = solve_norm_equation(L, K, one_plus_y, seed)
    if norm(c, L, K) != y_img + 1:
        raise ConstructionError("norm equation")

    spec = AlgebraSpec(q=q, d=d, e=e, seed=seed, Fq=Fq, g=g, K=K, y_img=y_img, L0=L0, xi0=xi0,
                       L=L, emb=emb, t=t, c=c, basis=basis, basis_inv=basis_inv, table=field_table(K))
    logging.info("Built algebra spec q={} d={} e={} seed={}: K={}, L={}".format(q, d, e, seed, K.name, L.name))
    return spec

def torus_generator(spec: AlgebraSpec) -> FieldElem:
    '''Fixed generator of L0*, its powers give the coset representatives of L0*/F_q*'''
    return primitive_element(spec.L0)
