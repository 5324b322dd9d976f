import networkx as nx
import numpy as np
import pytest

from utils.ff import field_table, make_extension, prime_field
from utils.matgrp import (
    IncompleteEnumerationError,
    LinMatrix,
    Mat,
    ProjMatrix,
    QuotientTag,
    SingularMatrixError,
    classify_quotient,
    conjugate_orbits,
    det_codes,
    det_power_class,
    det_square_class,
    double_coset,
    generate_group,
    lin_matrix,
    order_pgl,
    order_psl,
    product_coverage,
    proj_canonical,
    selberg_pair,
)


def test_group_orders():
    assert order_psl(2, 8) == 504
    assert order_pgl(2, 5) == 120
    assert order_psl(2, 27) == 9828
    assert order_psl(3, 4) == 20160
    assert order_pgl(3, 4) == 60480

def test_mat_inverse_and_det():
    F = prime_field(7)
    M = Mat(F, [[2, 3], [1, 4]])
    assert M.det() == 5
    assert M * M.inverse() == Mat.identity(F, 2)
    assert M.power(-2) * M.power(2) == Mat.identity(F, 2)
    with pytest.raises(SingularMatrixError):
        Mat(F, [[1, 2], [2, 4]]).inverse()
    with pytest.raises(SingularMatrixError):
        proj_canonical(Mat(F, [[1, 2], [2, 4]]))

def test_projective_classes_ignore_scalars():
    F = prime_field(5)
    M = Mat(F, [[2, 1], [3, 3]])
    assert proj_canonical(M) == proj_canonical(M * 3)
    assert lin_matrix(M) != lin_matrix(M * 3)
    P = proj_canonical(M)
    assert (P * P.inverse()).is_identity()

def test_unipotent_order():
    A, _ = selberg_pair(prime_field(5))
    assert A.power(5).is_identity()
    assert not A.power(4).is_identity()
    G = generate_group([A])
    assert len(G) == 5
    assert G.complete

@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_selberg_pair_generates_psl2(p):
    G = generate_group(list(selberg_pair(prime_field(p))))
    assert len(G) == p * (p * p - 1) // 2
    classification = classify_quotient(G, p)
    assert classification.tag == QuotientTag.PSL
    assert str(classification) == "PSL2({})".format(p)

def test_linear_pair_generates_sl2():
    A, B = selberg_pair(prime_field(5), projective=False)
    assert isinstance(A, LinMatrix)
    G = generate_group([A, B])
    assert len(G) == 120
    assert classify_quotient(G, 5).tag == QuotientTag.SL

def test_group_closure(psl2_5):
    G, A, B = psl2_5
    for x in G:
        assert x * A in G
        assert x * B.inverse() in G
        assert x.inverse() in G
    assert G.element(0).is_identity()

def test_enumeration_is_reproducible():
    gens = list(selberg_pair(prime_field(7)))
    first = generate_group(gens)
    second = generate_group(gens)
    assert np.array_equal(first.elements, second.elements)

def test_cap_marks_group_incomplete():
    gens = list(selberg_pair(prime_field(7)))
    G = generate_group(gens, cap=10)
    assert not G.complete
    assert len(G) == 10
    with pytest.raises(IncompleteEnumerationError):
        classify_quotient(G, 7)

def test_right_multiply_all_is_permutation(psl2_5):
    G, A, _ = psl2_5
    image = G.right_multiply_all(A)
    assert sorted(image.tolist()) == list(range(len(G)))
    for i in (0, 7, 31):
        assert G.element(int(image[i])) == G.element(i) * A

def test_det_codes_match_exact_determinant(F4):
    table = field_table(F4)
    rng = np.random.default_rng(5)
    for d in (2, 3, 4):
        for _ in range(20):
            M = Mat(F4, [[F4.from_int(int(x)) for x in row] for row in rng.integers(0, 4, (d, d))])
            codes = [table.code_of_raw(v) for row in M.raw for v in row]
            assert int(det_codes(table, np.array(codes), d)[0]) == table.to_code(M.det())

def test_det_power_class_on_pgl():
    F = prime_field(5)
    square = proj_canonical(Mat(F, [[1, 1], [0, 1]]))
    non_square = proj_canonical(Mat(F, [[2, 0], [0, 1]]))
    assert det_power_class(square) == 0
    assert det_power_class(non_square) == 1

def _unipotents(p):
    F = prime_field(p)
    upper = [proj_canonical(Mat(F, [[1, t], [0, 1]])) for t in range(p)]
    lower = [proj_canonical(Mat(F, [[1, 0], [t, 1]])) for t in range(p)]
    return upper, lower

def _exhaustive_products(factors):
    reached = {factors[0][0].identity(factors[0][0].table, 2)}
    for factor in factors:
        reached = {x * s for x in reached for s in factor}
    return reached

def test_product_coverage_positive_and_negative(psl2_5):
    G, _, _ = psl2_5
    upper, lower = _unipotents(5)
    full = product_coverage(G, [upper, lower, upper, lower])
    assert full.covered
    assert full.reached == len(G) == len(_exhaustive_products([upper, lower, upper, lower]))
    partial = product_coverage(G, [upper, lower])
    assert not partial.covered
    assert partial.reached == len(_exhaustive_products([upper, lower])) == 25

def test_product_coverage_accepts_indices(psl2_5):
    G, _, _ = psl2_5
    upper, lower = _unipotents(5)
    as_indices = [[G.index(x) for x in upper], [G.index(x) for x in lower]]
    assert product_coverage(G, as_indices) == product_coverage(G, [upper, lower])

def test_double_coset_of_identity_is_subgroup(psl2_5):
    G, A, _ = psl2_5
    members = list(G)
    identity = ProjMatrix.identity(A.table, 2)
    assert double_coset(members, identity, members) == set(members)
    upper, _ = _unipotents(5)
    assert double_coset(upper, identity, upper) == set(upper)

def test_conjugate_orbits_partition(psl2_5):
    G, _, _ = psl2_5
    S = list(G)
    orbits = conjugate_orbits(S, S)
    assert sum(len(o) for o in orbits) == len(S)
    # A5 has class sizes 1, 12, 12, 15, 20
    assert sorted(len(o) for o in orbits) == [1, 12, 12, 15, 20]

def test_generic_extension_field_group():
    F9 = make_extension(prime_field(3), 2)
    A, B = selberg_pair(F9)
    G = generate_group([A, B])
    # entries stay in F_3
    assert len(G) == 12

def _pgl2(p):
    F = prime_field(p)
    A, B = selberg_pair(F)
    return generate_group([A, B, proj_canonical(Mat(F, [[2, 0], [0, 1]]))])

def test_pgl_classification_at_24():
    G = _pgl2(3)
    assert len(G) == 24
    classification = classify_quotient(G, 3)
    assert classification.tag == QuotientTag.PGL
    assert str(classification) == "PGL2(3)"

def test_det_square_class_values():
    F5 = prime_field(5)
    assert det_square_class(ProjMatrix.identity(field_table(F5), 2))
    assert not det_square_class(proj_canonical(Mat(F5, [[1, 0], [0, 2]])))
    assert det_square_class(proj_canonical(Mat(F5, [[1, 0], [0, 4]])))
    # scaling multiplies det by a square
    M = Mat(F5, [[2, 1], [3, 3]])
    assert det_square_class(proj_canonical(M)) == det_square_class(proj_canonical(M * 2))

def test_det_square_class_even_characteristic():
    F8 = make_extension(prime_field(2), 3)
    rng = np.random.default_rng(8)
    checked = 0
    while checked < 25:
        M = Mat(F8, [[F8.from_int(int(x)) for x in row] for row in rng.integers(0, 8, (2, 2))])
        if not M.is_invertible():
            continue
        assert det_square_class(proj_canonical(M))
        checked += 1

def test_det_square_class_constant_on_conjugacy_classes():
    G = _pgl2(5)
    assert len(G) == 120
    members = list(G)
    orbits = conjugate_orbits(members, members)
    for orbit in orbits:
        assert len({det_square_class(x) for x in orbit}) == 1
    squares = [x for x in members if det_square_class(x)]
    assert len(squares) == 60
    assert {det_power_class(x) == 0 for x in squares} == {True}

def test_ball_product_covers_at_diameter(psl2_5):
    G, A, B = psl2_5
    gens = [A, B, A.inverse(), B.inverse()]
    cayley = nx.Graph()
    for s in gens:
        image = G.right_multiply_all(s)
        cayley.add_edges_from((i, int(image[i])) for i in range(len(G)))
    diameter = nx.eccentricity(cayley, 0)
    assert diameter == nx.diameter(cayley)
    ball = gens + [ProjMatrix.identity(A.table, 2)]
    assert product_coverage(G, [ball] * diameter).covered
    short = product_coverage(G, [ball] * (diameter - 1))
    assert not short.covered
    assert short.reached == sum(1 for v in range(len(G)) if nx.shortest_path_length(cayley, 0, v) < diameter)
