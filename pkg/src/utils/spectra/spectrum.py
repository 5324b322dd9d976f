'''
Eigenvalues of the normalized adjacency operator, trivial eigendata and the
bound verdicts computed from them.
'''

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from utils.helpers.time import elapsed_ms

from .error import (
    DenseCapExceededError,
    IterativeConvergenceError,
    MissingTrivialEigenvalueError,
    SpectrumRangeError,
)
from .expansion import expansion_summary
from .graph import CayleyGraph

UNIFORM_BOUND = 19 / 20
RANGE_TOL = 1e-9
SMALL_DENSE = 32

def ramanujan_bound(q: int) -> float:
    return 2 * math.sqrt(q) / (q + 1)

def degree_d_bound(q: int, d: int) -> float:
    '''d q^((d-1)/2) / ((q^d - 1)/(q - 1))'''
    return d * q ** ((d - 1) / 2) / ((q ** d - 1) // (q - 1))

def trivial_values(d: int) -> List[float]:
    return sorted({round(math.cos(2 * math.pi * j / d), 12) + 0.0 for j in range(d)}, reverse=True)

@dataclass
class SpectralReport:
    n: int
    k: int
    method: str
    lambda2: float
    lambda_min: float
    spectrum: Optional[np.ndarray] = None
    residual: Optional[float] = None
    trivial: List[Tuple[float, int]] = field(default_factory=list)
    lambda_x: Optional[float] = None
    bounds: Dict[str, float] = field(default_factory=dict)
    verdicts: Dict[str, bool] = field(default_factory=dict)
    tolerances: Dict[str, float] = field(default_factory=dict)
    expansion: Dict[str, float] = field(default_factory=dict)
    runtime_ms: float = 0.0

    def to_dict(self, include_spectrum: bool = True) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "method": self.method,
            "lambda2": float(self.lambda2),
            "lambda_min": float(self.lambda_min),
            "lambda_x": None if self.lambda_x is None else float(self.lambda_x),
            "residual": None if self.residual is None else float(self.residual),
            "trivial": [[float(v), int(m)] for v, m in self.trivial],
            "bounds": {k: float(v) for k, v in sorted(self.bounds.items())},
            "verdicts": {k: bool(v) for k, v in sorted(self.verdicts.items())},
            "tolerances": dict(sorted(self.tolerances.items())),
            "expansion": {k: (int(v) if k == "mixing_steps" else float(v)) for k, v in sorted(self.expansion.items())},
            "runtime_ms": float(self.runtime_ms),
        }
        if include_spectrum and self.spectrum is not None:
            out["spectrum"] = [float(x) for x in self.spectrum]
        return out

class TrivialEigen(NamedTuple):
    value: float
    vector: np.ndarray

class IterativeExtremes(NamedTuple):
    lambda2: float
    lambda_min: float
    residual: float

def _check_range(low: float, high: float, top_is_one: bool = True):
    if low < -1 - RANGE_TOL or high > 1 + RANGE_TOL or (top_is_one and abs(high - 1) > RANGE_TOL):
        raise SpectrumRangeError(low, high)

def full_spectrum_dense(graph: CayleyGraph, dense_cap: int = 5000, tol: float = 1e-8) -> SpectralReport:
    '''All eigenvalues of A/k, descending (LAPACK symmetric tridiagonal path)'''
    if graph.n > dense_cap:
        raise DenseCapExceededError(graph.n, dense_cap)
    start = time.perf_counter()
    delta = graph.dense_adjacency() / graph.k
    spectrum = scipy.linalg.eigh(delta, eigvals_only=True, check_finite=False)[::-1].copy()
    _check_range(float(spectrum[-1]), float(spectrum[0]))
    below = spectrum[spectrum < 1 - tol]
    lambda2 = float(below[0]) if len(below) else float(spectrum[-1])
    report = SpectralReport(
        n=graph.n, k=graph.k, method="dense",
        lambda2=lambda2, lambda_min=float(spectrum[-1]), spectrum=spectrum,
        tolerances={"eig_tol": tol},
        runtime_ms=elapsed_ms(start),
    )
    logging.debug("Dense spectrum of {} vertices: lambda2 = {}, lambda_min = {}".format(graph.n, lambda2, report.lambda_min))
    return report

def _orthonormal(deflate: Sequence[np.ndarray], n: int) -> np.ndarray:
    if not deflate:
        return np.zeros((n, 0))
    Q, R = np.linalg.qr(np.stack([np.asarray(v, dtype=float) for v in deflate], axis=1))
    keep = np.abs(np.diag(R)) > 1e-12
    return Q[:, keep]

def _dense_projected(graph: CayleyGraph, Q: np.ndarray) -> IterativeExtremes:
    delta = graph.dense_adjacency() / graph.k
    Z = scipy.linalg.null_space(Q.T) if Q.shape[1] else np.eye(graph.n)
    if Z.shape[1] == 0:
        return IterativeExtremes(float("nan"), float("nan"), 0.0)
    values = scipy.linalg.eigh(Z.T @ delta @ Z, eigvals_only=True)
    return IterativeExtremes(float(values[-1]), float(values[0]), 0.0)

def lambda_extremes_iterative(graph: CayleyGraph, deflate: Sequence[np.ndarray], tol: float = 1e-10,
                              maxiter: int = 5000, seed: int = 0) -> IterativeExtremes:
    '''
    Largest and smallest eigenvalues of A/k on the orthogonal complement of
    the deflation vectors, by restarted Lanczos (ARPACK) on a matrix-free
    operator. Deflated directions are shifted to -2 (resp. +2) so they sit
    outside the searched end of the spectrum.
    '''
    n = graph.n
    Q = _orthonormal(deflate, n)
    if n - Q.shape[1] <= SMALL_DENSE:
        return _dense_projected(graph, Q)

    def project(x):
        return x - Q @ (Q.T @ x)

    rng = np.random.default_rng(seed)
    v0 = project(rng.standard_normal(n))

    results = {}
    for which, shift in (("LA", -2.0), ("SA", 2.0)):
        def matvec(x, shift=shift):
            x = np.asarray(x).ravel()
            return project(graph.matvec(project(x))) + shift * (Q @ (Q.T @ x))
        op = LinearOperator((n, n), matvec=matvec, dtype=np.float64)
        try:
            values, vectors = eigsh(op, k=1, which=which, tol=tol, maxiter=maxiter, v0=v0)
        except ArpackNoConvergence as err:
            residual = float("nan")
            if len(err.eigenvalues):
                v = err.eigenvectors[:, 0]
                residual = float(np.linalg.norm(graph.matvec(v) - err.eigenvalues[0] * v))
            raise IterativeConvergenceError(which, residual, maxiter)
        v = project(vectors[:, 0])
        v /= np.linalg.norm(v)
        residual = float(np.linalg.norm(graph.matvec(v) - values[0] * v))
        results[which] = (float(values[0]), residual)

    extremes = IterativeExtremes(results["LA"][0], results["SA"][0], max(results["LA"][1], results["SA"][1]))
    if extremes.residual > max(tol, 1e-8) * 100:
        logging.warning("Iterative eigenpair residual {} is large relative to tol {}".format(extremes.residual, tol))
    logging.debug("Iterative extremes of {} vertices: {}".format(n, extremes))
    return extremes

def trivial_eigendata(graph: CayleyGraph) -> List[TrivialEigen]:
    '''
    Eigenpairs lifted from the abelian quotient by the determinant class.
    For a group graph these are the characters of the image of
    x -> det(x) mod (K*)^m, m = gcd(d, |K|-1); complex characters come as
    real and imaginary parts sharing one eigenvalue. Group-less graphs give
    the constant vector and, if bipartite, the sign vector.
    '''
    n = graph.n
    const = np.full(n, 1 / math.sqrt(n))
    if graph.group is None:
        out = [TrivialEigen(1.0, const)]
        G = graph.to_networkx()
        if nx.is_bipartite(G):
            color = nx.bipartite.color(G)
            sign = np.array([1.0 if color[v] == 0 else -1.0 for v in range(n)]) / math.sqrt(n)
            out.append(TrivialEigen(-1.0, sign))
        return out

    group = graph.group
    table = group.table
    m = math.gcd(group.d, table.order - 1)
    vertex_class = table.power_class(group.det_codes(), m).astype(np.int64)
    move_class = np.array([table.power_class(s.det_code(), m) for s in graph.moves], dtype=np.int64)
    # image of the class map is the subgroup of Z/m generated by the moves
    step = math.gcd(m, *[int(c) for c in move_class]) if len(move_class) else m
    r = m // step
    out = []
    for j in range(r // 2 + 1):
        angle_moves = 2 * math.pi * j * (move_class // step) / r
        value = float(np.cos(angle_moves).sum() / graph.k)
        angle = 2 * math.pi * j * (vertex_class // step) / r
        re = np.cos(angle)
        out.append(TrivialEigen(value, re / np.linalg.norm(re)))
        if 0 < 2 * j < r:
            im = np.sin(angle)
            out.append(TrivialEigen(value, im / np.linalg.norm(im)))
    return out

def _multiplicities(values: Sequence[float], tol: float) -> List[Tuple[float, int]]:
    out: List[Tuple[float, int]] = []
    for v in sorted(values, reverse=True):
        if out and abs(out[-1][0] - v) <= tol:
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((v, 1))
    return out

def lambda_nontrivial(report: SpectralReport, trivial: Sequence[TrivialEigen], q: int = None, d: int = None,
                      tol: float = 1e-8) -> float:
    '''
    lambda(X) after removing one copy of every trivial eigenvalue; fills the
    report's trivial list, bounds and verdicts.
    '''
    values = [t.value for t in trivial]
    report.trivial = _multiplicities(values, tol)
    report.tolerances["trivial_tol"] = tol

    if report.spectrum is not None:
        remaining = list(report.spectrum)
        for value in values:
            best = min(range(len(remaining)), key=lambda i: abs(remaining[i] - value), default=None)
            if best is None or abs(remaining[best] - value) > tol:
                raise MissingTrivialEigenvalueError(value)
            remaining.pop(best)
        nontrivial = np.array(remaining)
    else:
        nontrivial = np.array([report.lambda2, report.lambda_min])
        nontrivial = nontrivial[~np.isnan(nontrivial)]

    lambda_x = float(np.abs(nontrivial).max()) if len(nontrivial) else 0.0
    report.lambda_x = lambda_x

    report.bounds["uniform"] = UNIFORM_BOUND
    report.verdicts["uniform"] = lambda_x <= UNIFORM_BOUND + tol
    if q is not None and d is not None:
        bound = degree_d_bound(q, d)
        allowed = trivial_values(d)
        report.bounds["degree_d"] = bound
        report.verdicts["degree_d"] = all(abs(v) <= bound + tol or any(abs(v - e) <= tol for e in allowed)
                                       for v in nontrivial)
        report.bounds["weak"] = 1 / math.sqrt(q)
        if d == 2:
            report.bounds["ramanujan"] = ramanujan_bound(q)
            report.verdicts["ramanujan"] = lambda_x <= ramanujan_bound(q) + tol
    return lambda_x

def analyze(graph: CayleyGraph, q: int = None, d: int = None, dense_cap: int = 5000, eig_tol: float = 1e-8,
            trivial_tol: float = 1e-8, iter_tol: float = 1e-10, iter_maxiter: int = 5000, seed: int = 0,
            mixing_samples: int = 20000) -> SpectralReport:
    '''
    Dense spectrum up to the cap, deflated extremes beyond it; then trivial
    handling, verdicts and the expansion summary.
    '''
    start = time.perf_counter()
    trivial = trivial_eigendata(graph)
    if graph.n <= dense_cap:
        report = full_spectrum_dense(graph, dense_cap, eig_tol)
    else:
        extremes = lambda_extremes_iterative(graph, [t.vector for t in trivial], iter_tol, iter_maxiter, seed)
        _check_range(extremes.lambda_min, extremes.lambda2, top_is_one=False)
        report = SpectralReport(n=graph.n, k=graph.k, method="iterative", lambda2=extremes.lambda2,
                                lambda_min=extremes.lambda_min, residual=extremes.residual,
                                tolerances={"iter_tol": iter_tol})
    lambda_nontrivial(report, trivial, q, d, trivial_tol)
    # second largest adjacency eigenvalue over k, trivial ones included
    if report.spectrum is not None:
        walk_lambda = float(report.spectrum[1]) if report.n > 1 else 1.0
    else:
        walk_lambda = max([report.lambda2] + [v for v, _ in report.trivial if v < 1 - trivial_tol])
    report.expansion = expansion_summary(graph, walk_lambda, dense_cap, mixing_samples, seed)
    report.runtime_ms = elapsed_ms(start)
    logging.info("Spectral report ({}): n = {}, k = {}, lambda(X) = {:.12f}".format(
        report.method, report.n, report.k, report.lambda_x))
    return report
