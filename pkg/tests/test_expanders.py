import math

import pytest

from utils.config import Config
from utils.expanders import (
    CSV_COLUMNS,
    CoverLiftError,
    FamilyTag,
    Settings,
    UnknownFamily,
    abcc_family,
    build_lsv_group,
    det_one_lift,
    expand_survey,
    lift_cover,
    lsv_family,
    results_frame,
    selberg_family,
    survey,
    unipotent_product,
)
from utils.ff import prime_field
from utils.lsv import UnsupportedConfigError, build_spec, gens_S
from utils.matgrp import Mat, det_square_class, order_pgl, order_psl, proj_canonical
from utils.spectra import ramanujan_bound


def test_settings_from_config():
    config = Config()
    config.load_from_dict(eig_tol=1e-6, enumeration_cap=1000)
    settings = Settings.from_config(config, dense_cap=50, iter_tol=None)
    assert settings.eig_tol == 1e-6
    assert settings.cap == 1000
    assert settings.dense_cap == 50
    assert settings.iter_tol == Config.iter_tol

def test_selberg_family_records_gap():
    result = selberg_family(5)
    assert (result.n, result.k) == (60, 3)
    assert result.classification == "PSL2(5)"
    assert result.verdict == "recorded"
    assert 0 < result.lambda_x < 1
    assert result.bound is None

def test_selberg_family_rejects_even_prime():
    with pytest.raises(UnsupportedConfigError):
        selberg_family(2)

@pytest.mark.parametrize("q,d,e", [(2, 2, 3), (5, 2, 1), (7, 2, 1)])
def test_lsv_family_is_ramanujan(q, d, e):
    result = lsv_family(q, d, e)
    ell = q ** e
    assert result.n in (order_psl(2, ell), order_pgl(2, ell))
    assert result.classification.startswith(("PSL2", "PGL2"))
    assert result.k == q + 1
    assert result.verdicts["ramanujan"]
    assert result.lambda_x <= ramanujan_bound(q) + 1e-8
    assert result.verdict == "pass"
    assert result.provenance["q"] == q

def test_lsv_223_instance():
    result = lsv_family(2, 2, 3)
    assert (result.n, result.k) == (504, 3)
    assert result.classification == "PSL2(8)"
    assert result.bound == pytest.approx(2 * math.sqrt(2) / 3)

def test_build_lsv_group_reports_seed():
    built = build_lsv_group(2, 2, 3, seed=4)
    assert built.seed >= 4
    assert built.attempts == built.seed - 4 + 1
    assert not built.classification.is_other

@pytest.mark.slow
@pytest.mark.parametrize("q,d,e", [(2, 2, 5), (3, 2, 3)])
def test_lsv_family_iterative(q, d, e):
    result = lsv_family(q, d, e)
    assert result.report.method == "iterative"
    assert result.verdicts["ramanujan"]

@pytest.mark.slow
def test_lsv_family_degree_three():
    result = lsv_family(2, 3, 2)
    assert result.k == 14
    assert result.verdicts["degree_d"]
    assert result.verdicts["uniform"]
    assert result.lambda_x <= 19 / 20 + 1e-8

@pytest.mark.slow
@pytest.mark.parametrize("p,e", [(3, 3), (5, 3)])
def test_abcc_family(p, e):
    result = abcc_family(p, e)
    assert result.verdicts["psl_p_order"]
    assert result.verdicts["containment"]
    assert result.lambda_x < 1 - 1e-6
    assert result.verdict == "pass"

def test_det_one_lift():
    F = prime_field(7)
    M = proj_canonical(Mat(F, [[3, 1], [1, 1]]))
    lift = det_one_lift(M)
    assert lift.to_mat().det() == 1
    assert proj_canonical(lift.to_mat()) == M

@pytest.mark.parametrize("p", [5, 7])
def test_lift_cover_contains_spectrum(p):
    result = lift_cover(p)
    assert result.verdicts["containment"]
    assert result.verdicts["cover_order"]
    assert result.n == p * (p * p - 1)
    assert result.k == 4
    assert result.classification == "SL2({}) -> PSL2({})".format(p, p)

@pytest.mark.parametrize("p", [11, 13])
def test_lift_cover_from_lsv_set(p):
    result = lift_cover(p, source="lsv")
    assert result.verdicts["containment"]
    assert result.verdicts["cover_order"]
    assert result.details["source"] == "lsv"
    assert result.seed == result.details["seeds_tried"] - 1
    assert result.provenance["seed"] == result.seed
    assert result.classification == "SL2({}) -> PSL2({})".format(p, p)
    S = gens_S(build_spec(p, 2, 1, result.seed)).S
    assert all(det_square_class(s) for s in S)

def test_lift_cover_from_lsv_set_needs_square_determinants():
    # the only ideal over F_3 is y = 1, so det b = 1/2 is never a square
    with pytest.raises(CoverLiftError):
        lift_cover(3, source="lsv", settings=Settings(max_reseeds=2))
    with pytest.raises(UnsupportedConfigError):
        lift_cover(5, source="zigzag")

def test_spectral_kwargs_carry_mixing_samples():
    kwargs = Settings(mixing_samples=500).spectral_kwargs(seed=4)
    assert kwargs["mixing_samples"] == 500
    assert kwargs["seed"] == 4

def test_unipotent_product_coverage():
    covered = unipotent_product(5)
    assert covered.verdicts["covered"]
    assert covered.verdict == "pass"
    assert covered.details["reached"] == 60
    assert len(covered.details["factor_lambdas"]) == 4
    partial = unipotent_product(5, repeats=1)
    assert partial.verdict == "fail"
    assert partial.details["reached"] == 25

def test_expand_survey():
    rows = expand_survey([{"family": "lsv", "q": [2, 3, 5], "e": [1, 3], "max_field": 30}])
    assert len(rows) == 5
    assert {"family": "lsv", "q": 3, "e": 3} in rows
    assert all(r["q"] ** r["e"] <= 30 for r in rows)
    with pytest.raises(UnknownFamily):
        expand_survey([{"family": "zigzag", "p": 3}])

def test_survey_records_failing_rows():
    results = survey([{"family": "selberg", "p": [3, 5]}, {"family": "lsv", "q": 2, "e": 1}])
    assert [r.family for r in results] == [FamilyTag.SELBERG, FamilyTag.SELBERG, FamilyTag.LSV]
    assert results[2].verdict == "error"
    assert results[2].classification == "InadmissibleIdealError"
    frame = results_frame(results)
    assert list(frame.columns) == CSV_COLUMNS
    assert len(frame) == 3

def test_result_json_has_no_timings():
    result = selberg_family(3)
    data = result.to_dict()
    assert "runtime_ms" not in data["report"]
    assert result.to_row()["runtime_ms"] >= 0
