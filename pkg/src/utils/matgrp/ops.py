'''
Group-level computations on enumerated matrix groups.
'''

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Set

import numpy as np

from .error import IncompleteEnumerationError
from .group import GroupEnum
from .proj import ProjMatrix, canonical_codes, matmul_codes

class QuotientTag(Enum):
    PSL = "PSL"
    PGL = "PGL"
    SL = "SL"
    GL = "GL"
    OTHER = "OTHER"

@dataclass(frozen=True)
class Classification:
    tag: QuotientTag
    d: int
    ell: int
    order: int

    def __str__(self):
        if self.tag == QuotientTag.OTHER:
            return "OTHER({})".format(self.order)
        return "{}{}({})".format(self.tag.value, self.d, self.ell)

    @property
    def is_other(self) -> bool:
        return self.tag == QuotientTag.OTHER

def order_gl(d: int, ell: int) -> int:
    return math.prod(ell ** d - ell ** i for i in range(d))

def order_pgl(d: int, ell: int) -> int:
    return order_gl(d, ell) // (ell - 1)

def order_sl(d: int, ell: int) -> int:
    return order_pgl(d, ell)

def order_psl(d: int, ell: int) -> int:
    return order_pgl(d, ell) // math.gcd(d, ell - 1)

def classify_quotient(G: GroupEnum, ell: int) -> Classification:
    '''Identify G by order; PSL (resp. SL) wins when it coincides with PGL (resp. GL)'''
    if not G.complete:
        raise IncompleteEnumerationError(len(G), G.cap)
    n, d = len(G), G.d
    if G.projective:
        candidates = [(QuotientTag.PSL, order_psl(d, ell)), (QuotientTag.PGL, order_pgl(d, ell))]
    else:
        candidates = [(QuotientTag.SL, order_sl(d, ell)), (QuotientTag.GL, order_gl(d, ell))]
    for tag, order in candidates:
        if n == order:
            return Classification(tag, d, ell, n)
    return Classification(QuotientTag.OTHER, d, ell, n)

def det_power_class(M: ProjMatrix, m: int = None) -> int:
    '''
    Class of det(M) in K*/(K*)^m with m = gcd(d, |K|-1) by default; well defined on
    projective classes because det(cM) = c^d det(M).
    '''
    m = m or math.gcd(M.d, M.table.order - 1)
    return int(M.table.power_class(M.det_code(), m))

def det_square_class(M: ProjMatrix) -> bool:
    '''True iff det of the canonical representative is a square'''
    return bool(M.table.is_square(M.det_code()))

@dataclass(frozen=True)
class Coverage:
    covered: bool
    reached: int

def _as_indices(G: GroupEnum, factor) -> np.ndarray:
    factor = list(factor)
    if factor and isinstance(factor[0], ProjMatrix):
        return np.array([G.index(x) for x in factor], dtype=np.int64)
    return np.asarray(factor, dtype=np.int64)

def product_coverage(G: GroupEnum, factors: List[Iterable]) -> Coverage:
    '''Size of S_1 S_2 ... S_l as a bitset over element indices'''
    if not G.complete:
        raise IncompleteEnumerationError(len(G), G.cap)
    if not factors:
        return Coverage(len(G) == 1, 1)
    reached = np.zeros(len(G), dtype=bool)
    reached[_as_indices(G, factors[0])] = True
    for factor in factors[1:]:
        current = np.flatnonzero(reached)
        nxt = np.zeros(len(G), dtype=bool)
        for s in _as_indices(G, factor):
            nxt[G.right_multiply_all(G.element(int(s)))[current]] = True
        reached = nxt
    count = int(reached.sum())
    return Coverage(count == len(G), count)

def conjugate_orbits(S: List[ProjMatrix], H: List[ProjMatrix]) -> List[List[ProjMatrix]]:
    '''
    Partition S by the relation "conjugate under some h in H". Orbits are
    listed by their smallest member position in S, members in S order.
    '''
    position = {}
    for i, s in enumerate(S):
        position.setdefault(s, i)
    H = list(H)
    inverses = [h.inverse() for h in H]
    assigned = [False] * len(S)
    orbits = []
    for i, s in enumerate(S):
        if assigned[i]:
            continue
        members = set()
        for h, h_inv in zip(H, inverses):
            j = position.get(h * s * h_inv)
            if j is not None:
                members.add(j)
        members.add(i)
        for j in members:
            assigned[j] = True
        orbits.append([S[j] for j in sorted(members)])
    return orbits

def double_coset(left: List[ProjMatrix], c: ProjMatrix, right: List[ProjMatrix]) -> Set[ProjMatrix]:
    '''{l c r : l in left, r in right}'''
    table, d = c.table, c.d
    cls = type(c)
    lc = matmul_codes(table, np.array([x.array() for x in left]), c.array(), d)
    out = set()
    for r in right:
        prods = matmul_codes(table, lc, r.array(), d)
        if c.projective:
            prods = canonical_codes(table, prods)
        out.update(cls(table, d, row) for row in prods)
    return out
