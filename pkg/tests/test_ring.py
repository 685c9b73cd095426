from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from f2sym.partitions import enumerate_partitions
from f2sym.ring import (
    ParseError, Poly, TruncationError, is_square_free, monomial_basis, parse, parse_poly, render,
)
from oracles import evaluate, partition_number

N = 12


def polys(max_deg: int = 6):
    mono = st.integers(min_value=0, max_value=max_deg).flatmap(
        lambda d: st.sampled_from(monomial_basis(d)))
    return st.lists(mono, max_size=5).map(lambda ms: Poly(ms, N))


@pytest.mark.parametrize("text,expected", [
    ("0", "0"),
    ("w1^2*w3 + w5", "w1^2*w3 + w5"),
    ("w5 + w1^2*w3", "w1^2*w3 + w5"),
    ("w3 + w1^2*w3", "w1^2*w3 + w3"),
    ("w2 + w1^2", "w1^2 + w2"),
    ("w1 + w1", "0"),
    ("w2*w1*w1", "w1^2*w2"),
    ("1 + w1", "w1 + 1"),
])
def test_parse_render(text, expected):
    assert render(parse(text)) == expected


def test_parse_degree_and_terms():
    x = parse("w1^2*w3 + w5")
    assert len(x) == 2 and x.degree() == 5 and x.is_homogeneous()
    assert parse("0").degree() == -1


@pytest.mark.parametrize("text,pos", [
    ("w0", 1),
    ("w1^0", 3),
    ("w1 +", 4),
    ("w1 ** w2", 4),
    ("x3", 0),
    ("", 0),
])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.position == pos


def test_parse_rejects_p_in_w_coordinates_and_overflow():
    with pytest.raises(ParseError):
        parse("p3")
    with pytest.raises(TruncationError):
        parse("w13")
    with pytest.raises(TruncationError):
        parse("w5^3")


def test_mixed_coordinates_parse():
    y = parse_poly("p1^3 + p1*w2 + p3", N, "mixed")
    assert y.render() == "p1^3 + p1*w2 + p3"
    assert parse_poly("p2", N, "mixed") == parse_poly("p1^2", N, "mixed")
    with pytest.raises(ParseError):
        parse_poly("w3", N, "mixed")


@given(polys())
def test_render_parse_roundtrip(x):
    assert parse(render(x)) == x


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a == Poly.zero(N)
    assert a * Poly.one(N) == a


@given(polys(4), polys(4))
def test_multiplication_is_evaluation_compatible(a, b):
    values = {i: (37 * i + 11) % 256 for i in range(1, N + 1)}
    from oracles import gmul
    assert evaluate(a * b, values) == gmul(evaluate(a, values), evaluate(b, values))


@given(polys(), polys())
def test_degree_is_multiplicative(a, b):
    if a and b and a.is_homogeneous() and b.is_homogeneous():
        assert (a * b).degrees() <= {a.degree() + b.degree()}


def test_truncation_drops_high_terms():
    x = Poly.gen(7, 12)
    assert (x * x).is_zero()
    assert (Poly.gen(6, 12) * Poly.gen(6, 12)).render() == "w6^2"
    with pytest.raises(TruncationError):
        Poly.gen(1, 12) + Poly.gen(1, 10)


@pytest.mark.parametrize("d", range(0, 15))
def test_basis_size_is_partition_number(d):
    basis = monomial_basis(d)
    assert len(basis) == partition_number(d) == len(enumerate_partitions(d))
    assert len(set(basis)) == len(basis)


def test_square_free():
    assert is_square_free((1, 2, 3))
    assert not is_square_free((1, 1, 2))
    assert is_square_free((1, 1, 2), "even")
    assert not is_square_free((2, 2), "even")
    assert all(i % 2 == 0 for m in monomial_basis(8, "even") for i in m)


def test_graded_component():
    x = parse("w1 + w1*w2 + w3")
    assert x.graded_component(3).render() == "w1*w2 + w3"
    assert x.graded_component(2).is_zero()


def test_vector_roundtrip():
    for d in range(8):
        for m in monomial_basis(d):
            x = Poly.monomial(m, N)
            assert Poly.from_vector(x.to_vector(d), d, N) == x
