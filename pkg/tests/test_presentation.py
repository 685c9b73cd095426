from __future__ import annotations

import pytest

from f2sym.involution import OmegaTable
from f2sym.presentation import (
    FPoly, Presentation, enumerate_delta_generators, f_monomial_basis, verify_presentation,
)
from f2sym.ring import TruncationError, parse
from f2sym.verifier import GradedIdealFamily


@pytest.fixture(scope="module")
def pres10() -> Presentation:
    return Presentation(10)


@pytest.fixture(scope="module")
def pres12() -> Presentation:
    return Presentation(12)


def test_delta_generators():
    assert enumerate_delta_generators(6) == [(2,), (4,), (2, 4), (6,)]
    gens = enumerate_delta_generators(12)
    assert all(len(set(a)) == len(a) and all(i % 2 == 0 for i in a) for a in gens)
    assert (2, 4, 6) in gens


def test_fpoly_render_and_arithmetic():
    d2 = FPoly.delta((2,), 10)
    d4 = FPoly.delta((4,), 10)
    p3 = FPoly.p(3, 10)
    assert (p3 * d4 + d4 * d2).render() == "p3*D[w4] + D[w4]*D[w2]"
    d24 = FPoly.delta((2, 4), 10)
    assert (p3 * d4 + d24 * d2).render() == "D[w2*w4]*D[w2] + p3*D[w4]"
    assert (d2 + d2).render() == "0"
    with pytest.raises(ValueError):
        FPoly.p(2, 10)


def test_f_basis_counts():
    # F_d is free on odd p's and D[a]; in degree 4: p1^4, p1 p3, p1^2 D[w2], D[w2]^2, D[w4]
    assert len(f_monomial_basis(4, 10)) == 5
    assert len(f_monomial_basis(0, 10)) == 1


def test_p_squared_relations(pres10):
    assert pres10.relation_p_squared(1).render() == "p1^2 + D[w2]"
    assert pres10.relation_p_squared(3).render() == "p3^2 + D[w6] + D[w2*w4] + D[w4]*D[w2]"
    with pytest.raises(ValueError):
        pres10.relation_p_squared(2)


def test_delta_extended(pres10):
    assert pres10.delta_extended(parse("w2^2", 10)).render() == "D[w2]*D[w2]"
    assert pres10.delta_extended(parse("w1^2", 10)).render() == "0"
    assert pres10.delta_extended(parse("w2", 10)).render() == "D[w2]"


def test_delta2_with_a_repeated_argument_vanishes(pres10):
    # x = y = w2: the two D[w2 z]*D[w2] terms cancel, and delta(w2^2) = D[w2]^2
    # cancels D[w2]*D[w2]*D[z]; so the relation is 0 in F for z = w2, w4.
    assert pres10.relation_delta2((2,), (2,), (2,)).render() == "0"
    assert pres10.relation_delta2((2,), (2,), (4,)).render() == "0"


def test_delta2_relations_are_needed_in_degree_12(pres12):
    nonzero = [r for r in pres12.relations if r.kind == "delta2" and r.poly]
    assert {r.label for r in nonzero} == {"D[w2],D[w4],D[w2*w4]", "D[w2],D[w4],D[w6]"}
    assert all(r.degree == 12 for r in nonzero)
    p_only = [r for r in pres12.relations if r.kind == "p2"]
    assert pres12.stilde_graded_dim(12, p_only) == 42
    assert pres12.stilde_graded_dim(12) == 40


def test_relations_evaluate_to_zero(pres12):
    for r in pres12.relations:
        assert pres12.evaluate(r.poly).is_zero(), r.label


def test_relation_degrees(pres10):
    for r in pres10.relations:
        assert r.poly.degrees() <= {r.degree}
        assert r.degree <= 10


def test_stilde_dims_without_relations(pres10):
    # free algebra dims equal |F_d|
    assert [pres10.stilde_graded_dim(d, []) for d in range(7)] == [1, 1, 2, 3, 5, 7, 12]


@pytest.mark.parametrize("n", [10, 12])
def test_verify_presentation(n):
    report = verify_presentation(n)
    assert report.passed, report.failures()
    assert [r.dims["Stilde"] for r in report.results] == \
        [1, 1, 1, 2, 3, 4, 6, 8, 12, 16, 22, 29, 40][: n + 1]


def test_presentation_against_a_larger_family():
    report = Presentation(10).verify(GradedIdealFamily(OmegaTable(12)))
    assert report.passed


def test_evaluation_rejects_overflow(pres10):
    with pytest.raises(TruncationError):
        pres10.relation_p_squared(7)


# -- delta calculus, as membership in the relation ideal ----------------------------

import random  # noqa: E402
from itertools import permutations  # noqa: E402

from f2sym.coordinates import PowerSumTable  # noqa: E402
from f2sym.ring import Poly, monomial_basis  # noqa: E402


def _random_element(rng, d, n):
    basis = monomial_basis(d)
    return Poly(rng.sample(basis, rng.randint(1, len(basis))), n)


def test_delta_of_x_dd_y(pres10):
    rng = random.Random(4)
    t = pres10.table
    for y in enumerate_delta_generators(10):
        ypoly = Poly.monomial(y, 10)
        for _ in range(4):
            d = rng.randint(0, 10 - sum(y))
            x = _random_element(rng, d, 10)
            lhs = pres10.delta_extended(x * t.dd(ypoly)) + \
                pres10.delta_extended(x) * pres10.delta_extended(ypoly)
            assert pres10.in_ideal(lhs)
        assert pres10.in_ideal(pres10.delta_extended(t.dd(ypoly)))


def test_delta_is_linear_over_power_sums(pres10):
    rng = random.Random(8)
    ps = PowerSumTable(10)
    for _ in range(30):
        k = rng.choice([1, 3, 5, 7, 9])
        d = rng.randint(0, 10 - k)
        x = _random_element(rng, d, 10)
        lhs = pres10.delta_extended(ps[k] * x) + FPoly.p(k, 10) * pres10.delta_extended(x)
        assert pres10.in_ideal(lhs)


def test_square_route_agrees_modulo_relations(pres10):
    # expanding w_2k^2 through the w^2 formula and the delta lemmas gives D[w_2k]^2
    for k in (1, 2):
        w2k = Poly.gen(2 * k, 10)
        lhs = pres10.delta_extended(w2k.square())
        rhs = FPoly.delta((2 * k,), 10) * FPoly.delta((2 * k,), 10)
        assert pres10.in_ideal(lhs + rhs)


def test_delta2_is_symmetric(pres12):
    gens = enumerate_delta_generators(12)
    for x, y, z in [((2,), (4,), (6,)), ((2,), (4,), (2, 4)), ((2,), (2,), (8,))]:
        assert x in gens and y in gens and z in gens
        forms = {pres12.relation_delta2(*p) for p in permutations((x, y, z))}
        assert len(forms) == 1


def test_evaluation_respects_grading(pres10):
    for d in range(11):
        for m in pres10.basis(d):
            assert pres10.evaluate_monomial(m).degrees() <= {d}


def test_quotient_shrinks_as_relations_are_added(pres12):
    rels = pres12.relations
    for d in range(13):
        dims = [pres12.stilde_graded_dim(d, rels[:j]) for j in range(len(rels) + 1)]
        assert dims == sorted(dims, reverse=True)
