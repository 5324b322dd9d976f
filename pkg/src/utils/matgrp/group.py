'''
Breadth-first enumeration of the group generated by a list of matrices.

The BFS is layered and vectorized: every frontier chunk is multiplied by all
moves (generators, then their inverses) at once, products are canonicalized
and packed into integer keys, and membership is a searchsorted lookup in the
sorted key array of the visited set. Discovery order equals that of a FIFO
queue processing parents in order and moves in order, so element indices are
reproducible.
'''

import logging
from typing import List

import numpy as np

from utils.ff import FieldTable

from .error import DimensionMismatchError, NotInGroupError
from .proj import LinMatrix, ProjMatrix, canonical_codes, det_codes, matmul_codes

DEFAULT_CAP = 2_000_000
CHUNK = 1 << 17

class GroupEnum:
    def __init__(self, table: FieldTable, d: int, projective: bool, elements: np.ndarray,
                 generators: List[ProjMatrix], complete: bool, cap: int):
        self.table = table
        self.d = d
        self.projective = projective
        self.elements = elements
        self.generators = list(generators)
        self.complete = complete
        self.cap = cap
        self._weights = _key_weights(table.order, d)
        self.keys = _pack(elements, self._weights)
        self._order = np.argsort(self.keys, kind="stable")
        self._sorted = self.keys[self._order]
        self._right_cache = {}

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def elem_type(self):
        return ProjMatrix if self.projective else LinMatrix

    def element(self, i: int) -> ProjMatrix:
        return self.elem_type(self.table, self.d, self.elements[i])

    def __iter__(self):
        for i in range(len(self)):
            yield self.element(i)

    def indices_of(self, codes: np.ndarray) -> np.ndarray:
        '''Indices of canonical code rows, -1 where absent'''
        keys = _pack(np.asarray(codes, dtype=np.int64).reshape(-1, self.d * self.d), self._weights)
        pos = np.searchsorted(self._sorted, keys)
        pos = np.minimum(pos, len(self._sorted) - 1)
        found = self._sorted[pos] == keys
        return np.where(found, self._order[pos], -1).astype(np.int64)

    def index(self, x: ProjMatrix) -> int:
        self._check(x)
        i = int(self.indices_of(x.array())[0])
        if i < 0:
            raise NotInGroupError(x)
        return i

    def __contains__(self, x: ProjMatrix) -> bool:
        self._check(x)
        return int(self.indices_of(x.array())[0]) >= 0

    def _check(self, x: ProjMatrix):
        if x.table is not self.table or x.d != self.d or x.projective != self.projective:
            raise DimensionMismatchError(self, x)

    def right_multiply_all(self, s: ProjMatrix) -> np.ndarray:
        '''Index of x*s for every element x, in element order'''
        self._check(s)
        if s.codes in self._right_cache:
            return self._right_cache[s.codes]
        out = np.empty(len(self), dtype=np.int64)
        for start in range(0, len(self), CHUNK):
            block = self.elements[start:start + CHUNK]
            prods = matmul_codes(self.table, block, s.array(), self.d)
            if self.projective:
                prods = canonical_codes(self.table, prods)
            out[start:start + CHUNK] = self.indices_of(prods)
        if (out < 0).any():
            raise NotInGroupError(s)
        self._right_cache[s.codes] = out
        return out

    def det_codes(self) -> np.ndarray:
        return det_codes(self.table, self.elements, self.d)

    def to_json(self) -> dict:
        return {
            "field": self.table.field.to_json(),
            "d": self.d,
            "projective": self.projective,
            "complete": self.complete,
            "order": len(self),
            "generators": [g.entries_int() for g in self.generators],
            "elements": [self.element(i).entries_int() for i in range(len(self))],
        }

    def __repr__(self):
        kind = "PGL" if self.projective else "GL"
        return "GroupEnum({}_{}({}), order={}, complete={})".format(kind, self.d, self.table.order, len(self), self.complete)


def _key_weights(order: int, d: int) -> np.ndarray:
    dd = d * d
    if order ** dd < (1 << 62):
        return np.array([order ** i for i in range(dd)], dtype=np.int64)
    # python ints beyond int64
    return np.array([order ** i for i in range(dd)], dtype=object)

def _pack(codes: np.ndarray, weights: np.ndarray) -> np.ndarray:
    if weights.dtype == object:
        return (codes.astype(object) * weights).sum(axis=1)
    return (codes * weights).sum(axis=1)

def _in_sorted(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    if len(sorted_keys) == 0:
        return np.zeros(len(keys), dtype=bool)
    pos = np.minimum(np.searchsorted(sorted_keys, keys), len(sorted_keys) - 1)
    return sorted_keys[pos] == keys

def _dedupe_moves(moves: List[ProjMatrix]) -> List[ProjMatrix]:
    seen = set()
    out = []
    for m in moves:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out

def generate_group(gens: List[ProjMatrix], cap: int = DEFAULT_CAP) -> GroupEnum:
    assert gens, "need at least one generator"
    first = gens[0]
    table, d, projective = first.table, first.d, first.projective
    for g in gens:
        first._same(g)
    moves = _dedupe_moves(list(gens) + [g.inverse() for g in gens])
    move_codes = [m.array() for m in moves]
    dd = d * d
    weights = _key_weights(table.order, d)

    identity = type(first).identity(table, d).array().reshape(1, dd)
    chunks = [identity]
    visited = _pack(identity, weights)
    frontier = identity
    total = 1
    complete = True
    layer = 0

    while len(frontier) and complete:
        layer += 1
        found = []
        for start in range(0, len(frontier), CHUNK):
            block = frontier[start:start + CHUNK]
            # rows ordered (parent, move)
            prods = np.stack([matmul_codes(table, block, mv, d) for mv in move_codes], axis=1).reshape(-1, dd)
            if projective:
                prods = canonical_codes(table, prods)
            keys = _pack(prods, weights)
            _, first_pos = np.unique(keys, return_index=True)
            first_pos = np.sort(first_pos)
            prods, keys = prods[first_pos], keys[first_pos]
            fresh = ~_in_sorted(visited, keys)
            prods, keys = prods[fresh], keys[fresh]
            if total + len(prods) > cap:
                prods, keys = prods[:cap - total], keys[:cap - total]
                complete = False
            visited = np.sort(np.concatenate([visited, keys]))
            found.append(prods)
            total += len(prods)
            if not complete:
                break
        frontier = np.concatenate(found) if found else np.empty((0, dd), dtype=np.int64)
        chunks.append(frontier)
        logging.debug("BFS layer {}: {} new, {} total".format(layer, len(frontier), total))

    elements = np.concatenate(chunks)
    if not complete:
        logging.warning("Enumeration cap {} reached; group is incomplete".format(cap))
    else:
        logging.info("Enumerated group of order {} in {} layers".format(total, layer))
    return GroupEnum(table, d, projective, elements, gens, complete, cap)
