'''
Parameter sweeps over the families. Rows are independent and run through
joblib; a failing row is recorded and the sweep continues.
'''

import itertools
import logging
from typing import Dict, List

import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from .error import UnknownFamily
from .families import abcc_family, lift_cover, lsv_family, selberg_family, unipotent_product
from .result import CSV_COLUMNS, FamilyResult, FamilyTag
from .settings import Settings

LIST_KEYS = ("p", "q", "d", "e", "seed", "source", "repeats")

def expand_survey(entries: List[Dict]) -> List[Dict]:
    '''
    Each entry names a family and gives scalar or list values; lists expand
    to their cartesian product. "max_field" drops rows with q^e (or p^e) above it.
    '''
    rows = []
    for entry in entries or []:
        entry = dict(entry)
        family = entry.pop("family")
        if family not in {t.value for t in FamilyTag}:
            raise UnknownFamily(family)
        max_field = entry.pop("max_field", None)
        keys = [k for k in entry if k in LIST_KEYS]
        unknown = [k for k in entry if k not in LIST_KEYS]
        if unknown:
            logging.warning("Ignoring survey keys {} for family {}".format(unknown, family))
        values = [entry[k] if isinstance(entry[k], list) else [entry[k]] for k in keys]
        for combo in itertools.product(*values):
            params = dict(zip(keys, combo))
            params["family"] = family
            base = params.get("q", params.get("p"))
            if max_field is not None and base is not None and base ** params.get("e", 1) > max_field:
                continue
            rows.append(params)
    return rows

def run_family(params: Dict, settings: Settings) -> FamilyResult:
    params = dict(params)
    name = params.pop("family")
    try:
        tag = FamilyTag(name)
    except ValueError:
        raise UnknownFamily(name)
    seed = params.get("seed", 0)
    match tag:
        case FamilyTag.SELBERG:
            return selberg_family(params["p"], settings)
        case FamilyTag.LSV:
            return lsv_family(params["q"], params.get("d", 2), params.get("e", 1), seed, settings)
        case FamilyTag.ABCC:
            return abcc_family(params["p"], params.get("e", 1), seed, settings)
        case FamilyTag.COVER:
            return lift_cover(params["p"], params.get("source", "selberg"), seed, settings)
        case FamilyTag.PRODUCT:
            return unipotent_product(params["p"], params.get("repeats", 2), settings)

def _safe_row(params: Dict, settings: Settings) -> FamilyResult:
    try:
        return run_family(params, settings)
    except Exception as err:
        logging.error("Survey row {} failed: {}".format(params, err))
        fields = {k: params.get(k) for k in ("p", "q", "d", "e", "seed")}
        return FamilyResult(FamilyTag(params["family"]), **fields, classification=type(err).__name__,
                            verdict="error", error=str(err))

def survey(entries: List[Dict], settings: Settings = None, n_jobs: int = 1) -> List[FamilyResult]:
    settings = settings or Settings()
    rows = expand_survey(entries)
    if not rows:
        return []
    logging.info("Survey of {} rows with {} jobs".format(len(rows), n_jobs))
    return Parallel(n_jobs=n_jobs)(delayed(_safe_row)(params, settings) for params in tqdm(rows, desc="survey"))

def results_frame(results: List[FamilyResult]) -> pd.DataFrame:
    return pd.DataFrame([r.to_row() for r in results], columns=CSV_COLUMNS)
