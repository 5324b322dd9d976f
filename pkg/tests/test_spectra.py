import math

import networkx as nx
import numpy as np
import pytest

from utils.ff import prime_field
from utils.lsv import build_spec, gens_S
from utils.matgrp import Mat, generate_group, proj_canonical, selberg_pair
from utils.spectra import (
    DenseCapExceededError,
    DuplicateGeneratorError,
    ExpansionSizeError,
    InvariantViolation,
    NotGeneratingError,
    UNIFORM_BOUND,
    analyze,
    cayley_graph,
    cheeger_bounds,
    degree_d_bound,
    edge_expansion_bruteforce,
    from_edges,
    from_networkx,
    full_spectrum_dense,
    lambda_extremes_iterative,
    mixing_bound,
    mixing_time_bound,
    mixing_tv,
    ramanujan_bound,
    read_edge_list,
    trivial_eigendata,
    trivial_values,
    vertex_expansion_bruteforce,
    write_edge_list,
)


@pytest.fixture(scope="module")
def psl2_7_graph():
    A, B = selberg_pair(prime_field(7))
    return cayley_graph(generate_group([A, B]), [A, B])

def _cycle(n):
    return from_networkx(nx.cycle_graph(n))


def test_bounds():
    assert ramanujan_bound(2) == pytest.approx(2 * math.sqrt(2) / 3)
    assert degree_d_bound(2, 3) == pytest.approx(6 / 7)
    assert degree_d_bound(5, 2) == pytest.approx(ramanujan_bound(5))
    assert UNIFORM_BOUND == 0.95
    assert trivial_values(3) == [1.0, -0.5]

def test_selberg_graph_shape(psl2_3_graph):
    graph = psl2_3_graph
    assert (graph.n, graph.k) == (12, 3)
    assert graph.is_connected()
    graph.check_symmetric()
    assert len(graph.edges()) == graph.n * graph.k // 2

def test_dense_spectrum_matches_networkx(psl2_3_graph):
    report = full_spectrum_dense(psl2_3_graph)
    A = nx.to_numpy_array(psl2_3_graph.to_networkx(), nodelist=range(psl2_3_graph.n))
    expected = np.sort(np.linalg.eigvalsh(A / psl2_3_graph.k))[::-1]
    assert np.allclose(report.spectrum, expected, atol=1e-10)
    assert report.spectrum[0] == pytest.approx(1.0)
    assert report.spectrum.sum() == pytest.approx(0.0, abs=1e-9)
    assert -1 - 1e-9 <= report.lambda_min <= report.lambda2 < 1

def test_dense_cap():
    with pytest.raises(DenseCapExceededError):
        full_spectrum_dense(_cycle(10), dense_cap=5)

def test_duplicate_and_non_generating(psl2_5):
    G, A, B = psl2_5
    with pytest.raises(DuplicateGeneratorError):
        cayley_graph(G, [A, B, A])
    with pytest.raises(NotGeneratingError):
        cayley_graph(G, [A])

def test_involution_counted_once(psl2_5):
    G, A, B = psl2_5
    graph = cayley_graph(G, [A, B])
    # B^2 = -I is trivial in PSL_2
    assert graph.k == 3
    assert len(graph.moves) == 3

def _instance(name):
    match name:
        case "selberg_7" | "selberg_11" | "selberg_13":
            A, B = selberg_pair(prime_field(int(name.split("_")[1])))
            return cayley_graph(generate_group([A, B]), [A, B])
        case "lsv_psl2_8":
            gens = gens_S(build_spec(2, 2, 3))
            return cayley_graph(generate_group(gens.S), gens.S)

@pytest.mark.parametrize("name", ["selberg_7", "selberg_11", "selberg_13", "lsv_psl2_8"])
def test_iterative_matches_dense(name):
    graph = _instance(name)
    assert 100 <= graph.n <= 5000
    dense = full_spectrum_dense(graph)
    trivial = trivial_eigendata(graph)
    extremes = lambda_extremes_iterative(graph, [t.vector for t in trivial], tol=1e-12)
    assert extremes.lambda2 == pytest.approx(dense.lambda2, abs=1e-8)
    assert extremes.lambda_min == pytest.approx(dense.lambda_min, abs=1e-8)

def test_analyze_paths_agree(psl2_7_graph):
    dense = analyze(psl2_7_graph)
    iterative = analyze(psl2_7_graph, dense_cap=100)
    assert dense.method == "dense" and iterative.method == "iterative"
    assert iterative.lambda_x == pytest.approx(dense.lambda_x, abs=1e-7)
    assert dense.trivial == [(1.0, 1)]

def test_trivial_eigendata_vectors(psl2_7_graph):
    for value, vector in trivial_eigendata(psl2_7_graph):
        assert np.allclose(psl2_7_graph.matvec(vector), value * vector)
        assert np.linalg.norm(vector) == pytest.approx(1.0)

def test_bipartite_symmetry():
    graph = _cycle(8)
    report = analyze(graph)
    assert np.allclose(np.sort(report.spectrum), np.sort(-report.spectrum), atol=1e-12)
    values = sorted(t.value for t in trivial_eigendata(graph))
    assert values == [-1.0, 1.0]
    assert report.lambda_x == pytest.approx(math.cos(2 * math.pi / 8))

def test_determinant_character_is_trivial():
    F = prime_field(5)
    A, _ = selberg_pair(F)
    t = proj_canonical(Mat(F, [[2, 0], [0, 1]]))
    # upper triangular classes: 5 * 4 elements, half with non-square determinant
    graph = cayley_graph(generate_group([A, t]), [A, t])
    assert (graph.n, graph.k) == (20, 4)
    trivial = trivial_eigendata(graph)
    assert sorted(v for v, _ in trivial) == pytest.approx([0.0, 1.0])
    for value, vector in trivial:
        assert np.allclose(graph.matvec(vector), value * vector)

def test_edge_list_checks(tmp_path):
    with pytest.raises(InvariantViolation) as err:
        from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert err.value.invariant == "regularity"
    with pytest.raises(InvariantViolation) as err:
        from_edges(3, [(0, 1), (1, 5)])
    assert err.value.invariant == "vertex range"

def test_edge_list_file(tmp_path, psl2_3_graph):
    path = tmp_path / "graph.edges"
    write_edge_list(psl2_3_graph, str(path), ["seed 0"])
    lines = path.read_text().splitlines()
    assert lines[0] == "# 12 3"
    assert lines[1] == "# seed 0"
    assert len([l for l in lines if not l.startswith("#")]) == 18
    graph = read_edge_list(str(path))
    assert np.array_equal(graph.neighbors, psl2_3_graph.neighbors)

    broken = tmp_path / "broken.edges"
    broken.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(InvariantViolation) as err:
        read_edge_list(str(broken))
    assert err.value.invariant == "regularity"

def test_expansion_of_cycle():
    graph = _cycle(8)
    h, witness = edge_expansion_bruteforce(graph)
    assert h == pytest.approx(2 / (2 * 4))
    assert len(witness) == 4
    eps, _ = vertex_expansion_bruteforce(graph)
    assert eps == pytest.approx(0.5)

def test_expansion_size_limit():
    with pytest.raises(ExpansionSizeError):
        vertex_expansion_bruteforce(_cycle(25))

def test_cheeger_sandwich(psl2_3_graph):
    eps, witness = vertex_expansion_bruteforce(psl2_3_graph)
    assert eps > 0
    assert 0 < len(witness) <= 6
    h, _ = edge_expansion_bruteforce(psl2_3_graph)
    report = full_spectrum_dense(psl2_3_graph)
    low, high = cheeger_bounds(report.lambda2)
    assert low - 1e-12 <= h <= high + 1e-12

def test_mixing(psl2_5):
    G, A, B = psl2_5
    graph = cayley_graph(G, [A, B])
    report = analyze(graph)
    assert mixing_tv(graph, 0) == pytest.approx(1 - 1 / graph.n)
    previous = 1.0
    for t in (5, 10, 20, 40):
        tv = mixing_tv(graph, t)
        assert tv <= previous + 1e-12
        assert tv <= mixing_bound(graph.n, report.lambda_x, t) + 1e-12
        previous = tv
    sampled = mixing_tv(graph, 40, dense_cap=10, samples=20000, seed=1)
    assert sampled < 0.2

def test_complete_graph_spectrum():
    graph = from_networkx(nx.complete_graph(4))
    report = analyze(graph)
    assert np.allclose(report.spectrum, [1.0, -1 / 3, -1 / 3, -1 / 3], atol=1e-12)
    assert [t.value for t in trivial_eigendata(graph)] == [1.0]
    assert report.lambda_x == pytest.approx(1 / 3)
    assert report.expansion["vertex_expansion"] == pytest.approx(1.0)
    assert report.expansion["edge_expansion"] == pytest.approx(2 / 3)

def test_six_cycle_expansion_and_deflation():
    graph = _cycle(6)
    eps, _ = vertex_expansion_bruteforce(graph)
    h, witness = edge_expansion_bruteforce(graph)
    assert eps == pytest.approx(2 / 3)
    assert h == pytest.approx(1 / 3)
    assert len(witness) == 3
    trivial = trivial_eigendata(graph)
    assert sorted(t.value for t in trivial) == [-1.0, 1.0]
    extremes = lambda_extremes_iterative(graph, [t.vector for t in trivial])
    assert extremes.lambda2 == pytest.approx(0.5)
    assert extremes.lambda_min == pytest.approx(-0.5)
    assert cheeger_bounds(0.5) == pytest.approx((0.25, 1.0))

def test_disconnected_graph_has_no_expansion():
    graph = from_networkx(nx.disjoint_union(nx.cycle_graph(3), nx.cycle_graph(3)))
    eps, witness = vertex_expansion_bruteforce(graph)
    assert eps == 0.0
    assert len(witness) == 3
    report = analyze(graph)
    assert report.lambda_x == pytest.approx(1.0)
    assert report.expansion["cheeger_lower"] == pytest.approx(0.0, abs=1e-9)
    assert "mixing_steps" not in report.expansion
    assert report.expansion["edge_expansion"] == 0.0

def test_analyze_attaches_expansion_summary():
    report = analyze(_cycle(6))
    summary = report.expansion
    assert summary["vertex_expansion"] == pytest.approx(2 / 3)
    assert summary["edge_expansion"] == pytest.approx(1 / 3)
    assert (summary["cheeger_lower"], summary["cheeger_upper"]) == pytest.approx((0.25, 1.0))
    assert summary["cheeger_lower"] <= summary["edge_expansion"] <= summary["cheeger_upper"]
    assert summary["mixing_steps"] == mixing_time_bound(6, 0.5) == 8
    assert summary["mixing_tv"] <= summary["mixing_bound"] <= 0.25
    assert report.to_dict()["expansion"]["mixing_steps"] == 8

def test_analyze_samples_mixing_beyond_dense_cap(psl2_7_graph):
    report = analyze(psl2_7_graph, dense_cap=100, mixing_samples=5000, seed=3)
    summary = report.expansion
    assert "vertex_expansion" not in summary
    steps = summary["mixing_steps"]
    assert mixing_bound(psl2_7_graph.n, report.lambda2, steps) <= 0.25
    assert summary["mixing_tv"] == mixing_tv(psl2_7_graph, steps, dense_cap=100, samples=5000, seed=3)
    assert summary["mixing_tv"] < 0.5
    assert analyze(psl2_7_graph, dense_cap=100, mixing_samples=5000, seed=3).expansion == summary
