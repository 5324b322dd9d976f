import math
from typing import Optional

import numpy as np

from .graph import CayleyGraph

MAX_MIXING_STEPS = 2000

def mixing_tv(graph: CayleyGraph, t: int, dense_cap: int = 5000, samples: int = 20000, seed: int = 0) -> float:
    '''
    Total-variation distance between the lazy walk (I + A/k)/2 after t steps
    from vertex 0 and the uniform distribution. Exact up to dense_cap
    vertices, estimated from sampled walks above it.
    '''
    assert t >= 0
    n = graph.n
    if n <= dense_cap:
        dist = np.zeros(n)
        dist[0] = 1.0
        for _ in range(t):
            dist = (dist + graph.matvec(dist)) / 2
        return float(0.5 * np.abs(dist - 1 / n).sum())

    rng = np.random.default_rng(seed)
    pos = np.zeros(samples, dtype=np.int64)
    for _ in range(t):
        move = rng.random(samples) < 0.5
        column = rng.integers(0, graph.k, samples)
        pos = np.where(move, graph.neighbors[pos, column], pos)
    counts = np.bincount(pos, minlength=n) / samples
    return float(0.5 * np.abs(counts - 1 / n).sum())

def mixing_bound(n: int, lambda_x: float, t: int) -> float:
    '''sqrt(n) ((1 + lambda)/2)^t'''
    return math.sqrt(n) * ((1 + lambda_x) / 2) ** t

def mixing_time_bound(n: int, walk_lambda: float, eps: float = 0.25) -> Optional[int]:
    '''Smallest t with mixing_bound(n, walk_lambda, t) <= eps; None without a gap'''
    rate = (1 + max(walk_lambda, -1.0)) / 2
    if rate >= 1:
        return None
    if rate <= 0:
        return 0
    return max(0, math.ceil(math.log(math.sqrt(n) / eps) / -math.log(rate)))
