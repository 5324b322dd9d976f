'''
Theorem-level assemblies: each family builds its group and generating set,
enumerates, classifies, builds the Cayley graph and records spectral verdicts.
'''

import logging
import time
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from sympy import isprime

from utils.ff import prime_field
from utils.lsv import (
    AlgebraSpec,
    DegenerateIdealError,
    GenSetS,
    UnsupportedConfigError,
    abcc_data,
    build_spec,
    gens_S,
)
from utils.matgrp import (
    Classification,
    GroupEnum,
    IncompleteEnumerationError,
    LinMatrix,
    Mat,
    NotInGroupError,
    ProjMatrix,
    classify_quotient,
    det_square_class,
    double_coset,
    generate_group,
    lin_matrix,
    order_psl,
    product_coverage,
    proj_canonical,
    selberg_pair,
)
from utils.spectra import (
    DenseCapExceededError,
    analyze,
    cayley_graph,
    full_spectrum_dense,
    graph_from_moves,
)
from utils.helpers.time import elapsed_ms

from .error import ClassificationError, CoverLiftError
from .result import FamilyResult, FamilyTag
from .settings import Settings

GAP_MARGIN = 1e-6

def _group(gens: List[ProjMatrix], settings: Settings) -> GroupEnum:
    G = generate_group(gens, settings.cap)
    if not G.complete:
        raise IncompleteEnumerationError(len(G), settings.cap)
    return G

def _require_odd_prime(p: int, allow_two: bool = False):
    if not isprime(p) or (p == 2 and not allow_two):
        raise UnsupportedConfigError("p = {} must be an odd prime".format(p))

def _finish(result: FamilyResult, start: float) -> FamilyResult:
    result.runtime_ms = elapsed_ms(start)
    logging.info("Family {} {}: n = {}, lambda = {}, verdict {}".format(
        result.family.value, result.params(), result.n, result.lambda_x, result.verdict))
    return result

def selberg_family(p: int, settings: Settings = None) -> FamilyResult:
    '''Cay(PSL_2(p), {A, B}); no numeric bound is claimed, the gap is recorded'''
    settings = settings or Settings()
    _require_odd_prime(p)
    start = time.perf_counter()
    A, B = selberg_pair(prime_field(p))
    G = _group([A, B], settings)
    classification = classify_quotient(G, p)
    graph = cayley_graph(G, [A, B])
    report = analyze(graph, **settings.spectral_kwargs())
    verdicts = {"gap": report.lambda_x < 1 - GAP_MARGIN}
    result = FamilyResult(FamilyTag.SELBERG, p=p, q=p, d=2, e=1, n=graph.n, k=graph.k,
                          classification=str(classification), report=report,
                          verdict="recorded" if verdicts["gap"] else "fail", verdicts=verdicts)
    return _finish(result, start)

@dataclass
class LSVBuild:
    spec: AlgebraSpec
    gens: GenSetS
    group: GroupEnum
    classification: Classification
    seed: int
    attempts: int

def build_lsv_group(q: int, d: int, e: int, seed: int = 0, settings: Settings = None) -> LSVBuild:
    '''
    Spec, generating set and generated group, re-seeding the ideal when b
    degenerates or the group is not PSL/PGL.
    '''
    settings = settings or Settings()
    last = "degenerate"
    for attempt in range(settings.max_reseeds + 1):
        current = seed + attempt
        try:
            spec = build_spec(q, d, e, current)
            gens = gens_S(spec)
        except DegenerateIdealError as err:
            logging.warning(str(err))
            continue
        G = _group(gens.S, settings)
        classification = classify_quotient(G, q ** e)
        if not classification.is_other:
            return LSVBuild(spec, gens, G, classification, current, attempt + 1)
        last = str(classification)
        logging.warning("Seed {} gave {} for (q={}, d={}, e={}); re-seeding".format(current, last, q, d, e))
    raise ClassificationError("(q={}, d={}, e={})".format(q, d, e), last, settings.max_reseeds + 1)

def lsv_family(q: int, d: int, e: int, seed: int = 0, settings: Settings = None) -> FamilyResult:
    '''The generating set S of the cyclic algebra construction on the group it generates'''
    settings = settings or Settings()
    start = time.perf_counter()
    built = build_lsv_group(q, d, e, seed, settings)
    spec, gens, G, classification, current = built.spec, built.gens, built.group, built.classification, built.seed

    graph = cayley_graph(G, gens.S)
    report = analyze(graph, q=q, d=d, **settings.spectral_kwargs(current))
    expected_k = len(gens.S) if d == 2 else 2 * len(gens.S)
    theorem = "ramanujan" if d == 2 else "degree_d"
    verdicts = {
        "count": len(gens.S) == spec.torus_order,
        "degree": graph.k == expected_k,
        theorem: report.verdicts[theorem],
        "uniform": report.verdicts["uniform"],
    }
    result = FamilyResult(FamilyTag.LSV, p=spec.p, q=q, d=d, e=e, seed=current, n=graph.n, k=graph.k,
                          classification=str(classification), report=report, bound=report.bounds[theorem],
                          verdict="pass" if all(verdicts.values()) else "fail", verdicts=verdicts,
                          details={"seeds_tried": built.attempts, "generators": gens.to_json()},
                          provenance=spec.to_json())
    return _finish(result, start)

def abcc_family(p: int, e: int, seed: int = 0, settings: Settings = None) -> FamilyResult:
    '''Cay(<A, B, C, C'>, {A, B, C, C'}) over F_{p^e} with the double coset containment of S'''
    settings = settings or Settings()
    _require_odd_prime(p, allow_two=True)
    start = time.perf_counter()
    spec, gens, out = abcc_data(p, e, seed)
    P = _group(out[:2], settings)
    members = list(P)
    union = double_coset(members, gens.C, members)
    if gens.C_prime is not None:
        union |= double_coset(members, gens.C_prime, members)
    containment = all(s in union for s in gens.S)

    H = _group(out, settings)
    classification = classify_quotient(H, p ** e)
    graph = cayley_graph(H, out)
    report = analyze(graph, **settings.spectral_kwargs(seed))
    verdicts = {
        "psl_p_order": len(P) == order_psl(2, p),
        "containment": containment,
        "gap": report.lambda_x < 1 - GAP_MARGIN,
    }
    result = FamilyResult(FamilyTag.ABCC, p=p, q=p, d=2, e=e, seed=seed, n=graph.n, k=graph.k,
                          classification=str(classification), report=report,
                          verdict="pass" if all(verdicts.values()) else "fail", verdicts=verdicts,
                          details={"generators": len(out), "subgroup_order": len(P), "double_coset_size": len(union)},
                          provenance=spec.to_json())
    return _finish(result, start)

def det_one_lift(M: ProjMatrix) -> LinMatrix:
    '''Determinant-one preimage in SL_d with the lexicographically smallest entries'''
    table = M.table
    rep = M.to_mat()
    target = int(table.inv(table.to_code(rep.det()))) - 1
    # scalars c with c^d = det^-1, as log codes
    scalars = [c for c in range(1, table.order) if (M.d * (c - 1) - target) % table.m == 0]
    if not scalars:
        raise CoverLiftError(M)
    candidates = [lin_matrix(rep * table.element(c)) for c in scalars]
    return min(candidates, key=lambda c: [x for row in c.entries_int() for x in row])

def _multiset_contained(small: np.ndarray, large: np.ndarray, tol: float) -> bool:
    small, large = np.sort(small), np.sort(large)
    j = 0
    for value in small:
        while j < len(large) and large[j] < value - tol:
            j += 1
        if j == len(large) or abs(large[j] - value) > tol:
            return False
        j += 1
    return True

def _square_lsv_set(p: int, seed: int, settings: Settings) -> Tuple[AlgebraSpec, List[ProjMatrix], int]:
    '''
    S for d = 2, e = 1, re-seeded until every element has a square determinant
    and so a determinant-one preimage. All of S shares one square class.
    '''
    for attempt in range(settings.max_reseeds + 1):
        current = seed + attempt
        try:
            spec = build_spec(p, 2, 1, current)
            S = gens_S(spec).S
        except DegenerateIdealError as err:
            logging.warning(str(err))
            continue
        if all(det_square_class(s) for s in S):
            return spec, S, attempt + 1
        logging.warning("Seed {} gives non-square determinants for p = {}; re-seeding".format(current, p))
    raise CoverLiftError("set S for p = {}".format(p),
                         "has non-square determinants for all {} seeds".format(settings.max_reseeds + 1))

def lift_cover(p: int, source: str = "selberg", seed: int = 0, settings: Settings = None) -> FamilyResult:
    '''
    Lift generators of a PSL_2(p) graph to SL_2(p) and check that the quotient
    spectrum sits inside the cover spectrum. The quotient graph uses the images
    of the cover's moves so both graphs share one degree.
    '''
    settings = settings or Settings()
    _require_odd_prime(p)
    start = time.perf_counter()
    if source == "selberg":
        quotient_gens = list(selberg_pair(prime_field(p)))
        provenance, attempts = {}, 0
    elif source == "lsv":
        spec, quotient_gens, attempts = _square_lsv_set(p, seed, settings)
        seed = spec.seed
        provenance = spec.to_json()
    else:
        raise UnsupportedConfigError("cover source {}".format(source))

    lifts = [det_one_lift(g) for g in quotient_gens]
    cover = _group(lifts, settings)
    quotient = _group(quotient_gens, settings)
    cover_graph = cayley_graph(cover, lifts)
    quotient_graph = graph_from_moves(quotient, [proj_canonical(m.to_mat()) for m in cover_graph.moves])
    if cover_graph.n > settings.dense_cap:
        raise DenseCapExceededError(cover_graph.n, settings.dense_cap)
    cover_report = full_spectrum_dense(cover_graph, settings.dense_cap, settings.eig_tol)
    quotient_report = full_spectrum_dense(quotient_graph, settings.dense_cap, settings.eig_tol)
    contained = _multiset_contained(quotient_report.spectrum, cover_report.spectrum, settings.eig_tol)

    report = analyze(cover_graph, **settings.spectral_kwargs(seed))
    verdicts = {
        "containment": contained,
        "cover_order": len(cover) == 2 * len(quotient),
    }
    result = FamilyResult(FamilyTag.COVER, p=p, q=p, d=2, e=1, seed=seed if source == "lsv" else None,
                          n=cover_graph.n, k=cover_graph.k,
                          classification="{} -> {}".format(classify_quotient(cover, p), classify_quotient(quotient, p)),
                          report=report, verdict="pass" if all(verdicts.values()) else "fail", verdicts=verdicts,
                          details={"source": source, "seeds_tried": attempts, "quotient_order": len(quotient),
                                   "quotient_lambda2": quotient_report.lambda2},
                          provenance=provenance)
    return _finish(result, start)

def product_expander(G: GroupEnum, factor_gens: Sequence[List[ProjMatrix]], settings: Settings = None) -> FamilyResult:
    '''
    Coverage G = G_1 G_2 ... G_l by the subgroups G_i = <S_i>, with lambda of
    Cay(G, union S_i) and of every Cay(G_i, S_i).
    '''
    settings = settings or Settings()
    start = time.perf_counter()
    factor_groups = [_group(list(gens), settings) for gens in factor_gens]
    factor_indices = []
    for H in factor_groups:
        idx = G.indices_of(H.elements)
        if (idx < 0).any():
            raise NotInGroupError(H)
        factor_indices.append(idx)
    coverage = product_coverage(G, factor_indices)

    union = []
    for gens in factor_gens:
        for s in gens:
            if s not in union:
                union.append(s)
    graph = cayley_graph(G, union)
    report = analyze(graph, **settings.spectral_kwargs())
    factor_lambdas = []
    for H, gens in zip(factor_groups, factor_gens):
        if len(H) == 1:
            factor_lambdas.append(0.0)
            continue
        factor_graph = cayley_graph(H, _distinct(gens))
        factor_lambdas.append(analyze(factor_graph, **settings.spectral_kwargs()).lambda_x)

    field = G.table.field
    result = FamilyResult(FamilyTag.PRODUCT, p=field.p, q=field.order, d=G.d, n=graph.n, k=graph.k,
                          classification=str(classify_quotient(G, field.order)), report=report,
                          verdict="pass" if coverage.covered else "fail", verdicts={"covered": coverage.covered},
                          details={"reached": coverage.reached, "factor_orders": [len(H) for H in factor_groups],
                                   "factor_lambdas": factor_lambdas})
    return _finish(result, start)

def _distinct(gens: Sequence[ProjMatrix]) -> List[ProjMatrix]:
    out = []
    for s in gens:
        if s not in out:
            out.append(s)
    return out

def unipotent_product(p: int, repeats: int = 2, settings: Settings = None) -> FamilyResult:
    '''PSL_2(p) as (U L)^repeats with U, L the upper and lower unipotent subgroups'''
    settings = settings or Settings()
    _require_odd_prime(p)
    F = prime_field(p)
    A, B = selberg_pair(F)
    lower = proj_canonical(Mat(F, [[1, 0], [1, 1]]))
    G = _group([A, B], settings)
    result = product_expander(G, [[A], [lower]] * repeats, settings)
    result.e = 1
    result.details["repeats"] = repeats
    return result
