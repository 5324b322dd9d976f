import itertools

import numpy as np
import pytest
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from utils.ff import (
    EmbeddingNotFoundError,
    FieldDesc,
    FieldMismatchError,
    InadmissibleIdealError,
    ZeroInverseError,
    ZeroNormError,
    conjugate_rank,
    discrete_log,
    field_table,
    find_embedding,
    find_normal_basis_generator,
    frobenius,
    in_subfield,
    irreducible_ideal_poly,
    make_extension,
    norm,
    prime_field,
    primitive_element,
    solve_norm_equation,
    trace,
)
from utils.ff import poly


def test_prime_field_arithmetic():
    F = prime_field(7)
    assert F(3) * F(5) == 1
    assert F(2).inverse() == 4
    assert F(3) - 5 == 5
    assert 1 - F(3) == F(5)
    assert F(3) ** 6 == 1
    assert F(3) / F(3) == F.one

def test_field_axioms_exhaustive(F2):
    F8 = make_extension(F2, 3)
    elements = list(F8.elements())
    assert len(elements) == 8
    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert (a - b) + b == a
    for a, b, c in itertools.product(elements, repeat=3):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
    for a in elements[1:]:
        assert a * a.inverse() == F8.one

def test_tower_field_axioms(F16_over_F4):
    F = F16_over_F4
    assert F.order == 16
    elements = list(F.elements())
    for a, b in itertools.product(elements, repeat=2):
        assert a * b == b * a
        assert (a + b) * a == a * a + b * a
    for a in elements[1:]:
        assert (a * a.inverse()).is_one()
        assert a ** (F.order - 1) == F.one

def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverseError):
        prime_field(5).zero.inverse()

def test_mixed_fields_refused():
    with pytest.raises(FieldMismatchError):
        prime_field(5)(1) + prime_field(7)(1)

def test_frobenius_is_automorphism(F9):
    F3 = prime_field(3)
    elements = list(F9.elements())
    images = {frobenius(x, F3) for x in elements}
    assert len(images) == 9
    for a, b in itertools.product(elements, repeat=2):
        assert frobenius(a + b, F3) == frobenius(a, F3) + frobenius(b, F3)
        assert frobenius(a * b, F3) == frobenius(a, F3) * frobenius(b, F3)
    for x in elements:
        assert frobenius(x, F3, 2) == x
    fixed = [x for x in elements if in_subfield(x, F3)]
    assert len(fixed) == 3

def test_norm_and_trace_surjective(F4, F16_over_F4):
    top = F16_over_F4
    norms = {norm(x, top, F4) for x in top.elements() if not x.is_zero()}
    assert norms == {x for x in F4.elements() if not x.is_zero()}
    traces = [trace(x, top, F4) for x in top.elements()]
    assert set(traces) == set(F4.elements())
    # every trace value is hit equally often
    assert all(traces.count(t) == 4 for t in F4.elements())

def test_norm_multiplicative(F9):
    F3 = prime_field(3)
    for a, b in itertools.product(list(F9.elements())[1:], repeat=2):
        assert norm(a * b, F9, F3) == norm(a, F9, F3) * norm(b, F9, F3)

def test_descend_outside_subfield(F4, F16_over_F4):
    x = F16_over_F4.gen
    with pytest.raises(ValueError):
        F16_over_F4.descend(x, F4)
    y = F16_over_F4.lift(F4.gen)
    assert F16_over_F4.descend(y, F4) == F4.gen

def test_solve_norm_equation(F4, F16_over_F4):
    for a in list(F4.elements())[1:]:
        c = solve_norm_equation(F16_over_F4, F4, a, seed=3)
        assert norm(c, F16_over_F4, F4) == a
    with pytest.raises(ZeroNormError):
        solve_norm_equation(F16_over_F4, F4, F4.zero)

def test_irreducible_matches_sympy_over_prime_field():
    F3 = prime_field(3)
    for coeffs in itertools.product(range(3), repeat=3):
        f = list(coeffs) + [1]
        expected = gf_irreducible_p([int(c) for c in reversed(f)], 3, ZZ)
        assert poly.is_irreducible(F3, f) == expected

def test_irreducible_count_over_extension(F4):
    raws = [F4._from_int(n) for n in range(4)]
    quadratics = sum(poly.is_irreducible(F4, [a, b, F4._one]) for a in raws for b in raws)
    cubics = sum(poly.is_irreducible(F4, [a, b, c, F4._one]) for a in raws for b in raws for c in raws)
    # (q^2 - q)/2 and (q^3 - q)/3 monic irreducibles
    assert quadratics == 6
    assert cubics == 20

def test_ideal_poly_avoids_zero_and_minus_one():
    F5 = prime_field(5)
    for seed in range(5):
        g = irreducible_ideal_poly(F5, 3, seed)
        raw = [c.value for c in g]
        assert len(g) == 4 and g[-1].is_one()
        assert poly.evaluate(F5, raw, 0) != 0
        assert poly.evaluate(F5, raw, 4) != 0
        assert poly.is_irreducible(F5, raw)

def test_ideal_poly_impossible_over_f2():
    with pytest.raises(InadmissibleIdealError):
        irreducible_ideal_poly(prime_field(2), 1)

def test_primitive_element_and_discrete_log(F9):
    g = primitive_element(F9)
    powers = {g ** k for k in range(8)}
    assert len(powers) == 8
    for k in range(8):
        assert discrete_log(g ** k, g) == k
    seeded = primitive_element(F9, seed=11)
    assert len({seeded ** k for k in range(8)}) == 8

def test_normal_basis_generator(F2, F16_over_F4, F4):
    F8 = make_extension(F2, 3)
    xi = find_normal_basis_generator(F8, F2, seed=1)
    assert conjugate_rank(xi, F8, F2) == 3
    xi = find_normal_basis_generator(F16_over_F4, F4)
    assert conjugate_rank(xi, F16_over_F4, F4) == 2
    assert find_normal_basis_generator(F4, F4) == F4.one

def test_find_embedding_between_towers(F2, F4):
    F16 = make_extension(F2, 4)
    emb = find_embedding(F4, F16)
    assert emb.is_root()
    assert emb.verify(np.random.default_rng(0))
    assert len({emb(x) for x in F4.elements()}) == 4

def test_composite_embedding_inside_one_tower(F4, F16_over_F4):
    F256 = make_extension(F16_over_F4, 2)
    composite = find_embedding(F4, F16_over_F4).then(find_embedding(F16_over_F4, F256))
    direct = find_embedding(F4, F256)
    assert composite.source is F4 and composite.target is F256
    for x in F4.elements():
        assert composite(x) == direct(x)

def test_composite_embedding_across_towers(F2, F4):
    F16 = make_extension(F2, 4)
    F256 = make_extension(F2, 8)
    composite = find_embedding(F4, F16).then(find_embedding(F16, F256))
    direct = find_embedding(F4, F256)
    assert composite.is_root()
    assert composite.verify(np.random.default_rng(2))
    # both images are roots of the modulus of F4, so they differ by a Frobenius power
    k = next(k for k in range(2) if composite.image == frobenius(direct.image, F2, k))
    for x in F4.elements():
        assert composite(x) == frobenius(direct(x), F2, k)
    assert {composite(x) for x in F4.elements()} == {direct(x) for x in F4.elements()}

def test_composite_embedding_rejects_mismatched_fields(F2, F4):
    F16 = make_extension(F2, 4)
    emb = find_embedding(F4, F16)
    with pytest.raises(FieldMismatchError):
        emb.then(emb)

def test_small_field_frobenius_norm_trace(F2, F4):
    t = F4.gen
    # the modulus of F4 over F2 is t^2 + t + 1
    assert frobenius(t, F2) == t + 1
    assert t * t == t + 1
    assert norm(t, F4, F2) == 1
    assert trace(t, F4, F2) == 1
    assert norm(t + 1, F4, F2) == 1
    assert trace(F4.one, F4, F2) == 0

def test_solve_norm_equation_over_f3(F9):
    F3 = F9.base
    c = solve_norm_equation(F9, F3, F3(2))
    assert norm(c, F9, F3) == 2
    for a in (1, 2):
        for seed in range(10):
            assert norm(solve_norm_equation(F9, F3, F3(a), seed=seed), F9, F3) == a

def test_embedding_impossible(F2):
    F8 = make_extension(F2, 3)
    F16 = make_extension(F2, 4)
    with pytest.raises(EmbeddingNotFoundError):
        find_embedding(F8, F16)

def test_field_table_matches_elements(F9):
    table = field_table(F9)
    elements = [table.element(c) for c in range(9)]
    for a, b in itertools.product(range(9), repeat=2):
        assert table.element(table.add(a, b)) == elements[a] + elements[b]
        assert table.element(table.mul(a, b)) == elements[a] * elements[b]
        assert table.element(table.sub(a, b)) == elements[a] - elements[b]
    for a in range(1, 9):
        assert table.element(table.inv(a)) == elements[a].inverse()
        assert table.element(table.power(a, 5)) == elements[a] ** 5
    assert table.is_square(np.arange(1, 9)).sum() == 4

def test_field_json_rebuilds_tower(F16_over_F4):
    data = F16_over_F4.to_json()
    rebuilt = FieldDesc.from_json(data)
    assert rebuilt.order == 16
    assert rebuilt.to_json() == data
