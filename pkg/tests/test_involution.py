from __future__ import annotations

import random

import pytest

from f2sym.involution import (
    OmegaTable, build_omega_table, dd, formal_w, norm, omega, thick_leibniz_defect,
)
from f2sym.ring import Poly, TruncationError, monomial_basis, parse
from oracles import complete, elementary, evaluate, omega_by_compositions


@pytest.mark.parametrize("text,expected", [
    ("w1", "w1"),
    ("w2", "w1^2 + w2"),
    ("w3", "w1^3 + w3"),
    ("0", "0"),
])
def test_omega_examples(table12, text, expected):
    assert omega(parse(text), table12).render() == expected


def test_dd_and_norm_examples(table12):
    assert dd(parse("w2"), table12).render() == "w1^2"
    assert dd(parse("w1"), table12).render() == "0"
    assert dd(parse("w4"), table12).render() == "w1^4 + w1^2*w2 + w2^2"
    assert norm(parse("w1"), table12).render() == "w1^2"


@pytest.mark.parametrize("k", range(1, 11))
def test_omega_matches_composition_formula(table12, k):
    expected = Poly(omega_by_compositions(k), 12)
    assert table12.omega_monomial((k,)) == expected


def test_omega_is_h_when_w_is_e():
    """Under w_i -> e_i(x), omega(w_k) -> h_k(x), checked at random GF(256) points."""
    rng = random.Random(5)
    t = OmegaTable(10)
    for _ in range(10):
        xs = [rng.randrange(256) for _ in range(rng.randint(1, 12))]
        values = {i: elementary(xs, i) for i in range(1, 11)}
        for k in range(1, 11):
            assert evaluate(t.omega(Poly.gen(k, 10)), values) == complete(xs, k)


def test_omega_rejects_wrong_truncation(table12):
    with pytest.raises(TruncationError):
        omega(Poly.gen(1, 10), table12)
    assert build_omega_table(6).max_degree == 6


def _sample(rng: random.Random, d: int, n: int) -> Poly:
    basis = monomial_basis(d)
    return Poly(rng.sample(basis, rng.randint(1, len(basis))), n)


def test_thick_leibniz_random_tuples():
    rng = random.Random(11)
    tables: dict[int, OmegaTable] = {}
    for _ in range(60):
        degs = [rng.randint(1, 8) for _ in range(rng.randint(1, 4))]
        n = sum(degs)
        t = tables.setdefault(n, OmegaTable(n))
        xs = [_sample(rng, d, n) for d in degs]
        assert thick_leibniz_defect(xs, t).is_zero()


def test_thick_leibniz_catches_a_wrong_rule(table12):
    x = y = parse("w2")
    naive = table12.dd(x * y) + table12.dd(x) * y + x * table12.dd(y)
    assert naive.render() == "w1^4"      # the ordinary Leibniz rule misses dd(x) dd(y)


def test_thick_leibniz_two_factors_closed_form(table12):
    x, y = parse("w1*w2 + w3"), parse("w2")
    lhs = table12.dd(x * y)
    rhs = table12.dd(x) * y + x * table12.dd(y) + table12.dd(x) * table12.dd(y)
    assert lhs == rhs


def test_formal_series():
    assert formal_w(3).render() == "w3 + w2 + w1"
    assert formal_w(2, plus_one=True).render() == "w2 + w1 + 1"
