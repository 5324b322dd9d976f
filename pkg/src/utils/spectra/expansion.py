'''
Exact vertex and edge expansion by exhaustive subset scan (small graphs only),
the Cheeger conversion from the spectral gap, and the summary analyze attaches.
'''

import math
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .error import ExpansionSizeError
from .graph import CayleyGraph
from .mixing import MAX_MIXING_STEPS, mixing_bound, mixing_time_bound, mixing_tv

MAX_VERTICES = 24
CHUNK = 1 << 20

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)

def _popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint32)
    return (_POPCOUNT8[x & 0xFF] + _POPCOUNT8[(x >> 8) & 0xFF]
            + _POPCOUNT8[(x >> 16) & 0xFF] + _POPCOUNT8[(x >> 24) & 0xFF])

def _subsets(n: int) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    '''Nonempty vertex subsets with |A| <= n/2 as bitmasks, with their sizes'''
    for start in range(1, 1 << n, CHUNK):
        masks = np.arange(start, min(start + CHUNK, 1 << n), dtype=np.uint32)
        sizes = _popcount(masks)
        keep = sizes <= n // 2
        yield masks[keep], sizes[keep]

def _members(mask: int, n: int) -> List[int]:
    return [v for v in range(n) if mask >> v & 1]

def _check_size(graph: CayleyGraph):
    if graph.n > MAX_VERTICES:
        raise ExpansionSizeError(graph.n, MAX_VERTICES)

def vertex_expansion_bruteforce(graph: CayleyGraph) -> Tuple[float, List[int]]:
    '''min |dA| / |A| over 0 < |A| <= n/2, dA the outer vertex boundary'''
    _check_size(graph)
    n = graph.n
    if n < 2:
        return 0.0, []
    nbr_mask = np.zeros(n, dtype=np.uint32)
    for v in range(n):
        for u in graph.neighbors[v]:
            nbr_mask[v] |= np.uint32(1 << int(u))
    best, witness = math.inf, 0
    for masks, sizes in _subsets(n):
        reach = np.zeros_like(masks)
        for v in range(n):
            member = (masks >> np.uint32(v)) & np.uint32(1)
            reach |= np.where(member == 1, nbr_mask[v], np.uint32(0))
        boundary = _popcount(reach & ~masks)
        ratio = boundary / sizes
        i = int(np.argmin(ratio))
        if ratio[i] < best:
            best, witness = float(ratio[i]), int(masks[i])
    return best, _members(witness, n)

def edge_expansion_bruteforce(graph: CayleyGraph) -> Tuple[float, List[int]]:
    '''min |E(A, A^c)| / (k |A|) over 0 < |A| <= n/2'''
    _check_size(graph)
    n = graph.n
    if n < 2:
        return 0.0, []
    best, witness = math.inf, 0
    for masks, sizes in _subsets(n):
        cut = np.zeros(len(masks), dtype=np.int64)
        for v in range(n):
            inside = ((masks >> np.uint32(v)) & np.uint32(1)).astype(bool)
            for u in graph.neighbors[v]:
                outside = ((masks >> np.uint32(int(u))) & np.uint32(1)) == 0
                cut += inside & outside
        ratio = cut / (graph.k * sizes)
        i = int(np.argmin(ratio))
        if ratio[i] < best:
            best, witness = float(ratio[i]), int(masks[i])
    return best, _members(witness, n)

def cheeger_bounds(lambda2: float) -> Tuple[float, float]:
    '''(1 - lambda2)/2 <= h <= sqrt(2 (1 - lambda2))'''
    gap = max(0.0, 1.0 - lambda2)
    return gap / 2, math.sqrt(2 * gap)

EXACT_CAP = 16

def expansion_summary(graph: CayleyGraph, walk_lambda: float, dense_cap: int = 5000, samples: int = 20000,
                      seed: int = 0, exact_cap: int = EXACT_CAP) -> Dict[str, float]:
    '''
    Cheeger interval and lazy-walk mixing at the step count the spectral bound
    predicts; exact vertex and edge expansion when n <= exact_cap.
    walk_lambda is the largest adjacency eigenvalue below 1, over k.
    '''
    low, high = cheeger_bounds(walk_lambda)
    out = {"cheeger_lower": low, "cheeger_upper": high}
    steps = mixing_time_bound(graph.n, walk_lambda)
    if steps is not None and steps <= MAX_MIXING_STEPS:
        out["mixing_steps"] = steps
        out["mixing_bound"] = mixing_bound(graph.n, walk_lambda, steps)
        out["mixing_tv"] = mixing_tv(graph, steps, dense_cap, samples, seed)
    if graph.n <= min(exact_cap, MAX_VERTICES):
        out["vertex_expansion"] = vertex_expansion_bruteforce(graph)[0]
        out["edge_expansion"] = edge_expansion_bruteforce(graph)[0]
    return out
