from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from f2sym.coordinates import PowerSumTable
from f2sym.involution import OmegaTable
from f2sym.partitions import (
    conjugate, enumerate_partitions, gamma_hook, is_self_conjugate, square_partition,
)
from f2sym.ring import Poly, TruncationError
from f2sym.schur import (
    SchurBasis, SchurExpr, mn_multiply, omega_on_schur, parse_schur, reduce_mod_I, s_basis_of_S,
    schur_from_expr, schur_in_w, to_schur_basis,
)
from oracles import complete, evaluate, schur_bialternant

N = 10


@pytest.fixture(scope="module")
def basis() -> SchurBasis:
    return SchurBasis(N)


def test_small_schur_polynomials():
    assert schur_in_w((), N).render() == "1"
    assert schur_in_w((2,), N).render() == "w2"
    assert schur_in_w((1, 1), N).render() == "w1^2 + w2"
    assert schur_in_w((2, 1), N).render() == "w1*w2 + w3"
    with pytest.raises(TruncationError):
        schur_in_w((11,), N)


def test_schur_against_bialternant():
    rng = random.Random(9)
    for _ in range(6):
        xs = rng.sample(range(1, 256), 4)
        values = {i: complete(xs, i) for i in range(1, N + 1)}
        for d in range(N + 1):
            for lam in enumerate_partitions(d):
                assert evaluate(schur_in_w(lam, N), values) == schur_bialternant(lam, xs)


def test_render_and_parse():
    e = parse_schur("s[1,1,1] + s[3] + s[2,1]")
    assert e.render() == "s[3] + s[2,1] + s[1,1,1]"
    assert parse_schur("0").render() == "0"
    assert (e + e).render() == "0"
    with pytest.raises(ValueError):
        parse_schur("t[1]")


def test_to_schur_examples(basis):
    ps = PowerSumTable(N)
    assert to_schur_basis(ps[3], basis).render() == "s[3] + s[2,1] + s[1,1,1]"
    assert basis.to_schur(Poly.gen(1, N).square()).render() == "s[2] + s[1,1]"


@pytest.mark.parametrize("d", range(N + 1))
def test_conversion_roundtrip(basis, d):
    for lam in enumerate_partitions(d):
        e = SchurExpr.of([lam], N)
        assert basis.to_schur(basis.from_schur(e)) == e


@pytest.mark.parametrize("d", range(N + 1))
def test_omega_conjugates(d):
    t = OmegaTable(N)
    for lam in enumerate_partitions(d):
        assert t.omega(schur_in_w(lam, N)) == schur_in_w(conjugate(lam), N)
        assert omega_on_schur(SchurExpr.of([lam], N)) == SchurExpr.of([conjugate(lam)], N)


def test_mn_examples():
    assert mn_multiply(3, parse_schur("s[]")).render() == "s[3] + s[2,1] + s[1,1,1]"
    assert mn_multiply(3, parse_schur("s[1]")).render() == "s[4] + s[2,2] + s[1,1,1,1]"
    with pytest.raises(TruncationError):
        mn_multiply(10, parse_schur("s[1]", N))
    with pytest.raises(ValueError):
        mn_multiply(0, parse_schur("s[1]"))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=N).flatmap(
    lambda k: st.tuples(st.just(k), st.sampled_from(
        [lam for d in range(N - k + 1) for lam in enumerate_partitions(d)]))))
def test_mn_agrees_with_multiplication(case):
    k, lam = case
    ps = PowerSumTable(N)
    basis = SchurBasis(N)
    lhs = schur_from_expr(mn_multiply(k, SchurExpr.of([lam], N)))
    assert lhs == ps[k] * schur_in_w(lam, N)
    assert basis.to_schur(lhs) == mn_multiply(k, SchurExpr.of([lam], N))


@pytest.mark.parametrize("k", range(1, N + 1))
def test_power_sum_is_sum_of_hooks(basis, k):
    hooks = SchurExpr.of([(k - i,) + (1,) * i for i in range(k)], N)
    assert basis.to_schur(PowerSumTable(N)[k]) == hooks


@pytest.mark.parametrize("j", range(1, 6))
def test_odd_power_sum_is_symmetric_hook_mod_I(basis, j):
    p = basis.to_schur(PowerSumTable(N)[2 * j - 1])
    assert reduce_mod_I(p) == reduce_mod_I(SchurExpr.of([gamma_hook(j)], N))


@pytest.mark.parametrize("j", range(0, 5))
def test_square_claim(j):
    top = (j + 1) ** 2
    prod = mn_multiply(2 * j + 1, SchurExpr.of([square_partition(j)], top))
    assert reduce_mod_I(prod) == SchurExpr.of([square_partition(j + 1)], top)
    selfconj = [lam for lam in prod.terms if is_self_conjugate(lam)]
    assert selfconj == [square_partition(j + 1)]


@pytest.mark.parametrize("d", range(N + 1))
def test_s_basis_of_S_spans_kernel(family12, basis, d):
    parts = enumerate_partitions(d)
    vecs = s_basis_of_S(d)
    for v in vecs:
        e = SchurExpr.of([parts[j] for j in range(len(parts)) if (v >> j) & 1], N)
        x = schur_from_expr(e)
        assert family12.S(d).contains(Poly(x.terms, 12).to_vector(d))
    assert len(vecs) == family12.S(d).dim


def test_reduce_mod_I_is_canonical():
    a = SchurExpr.of([(3, 1)], N)
    b = SchurExpr.of([(2, 1, 1)], N)
    assert reduce_mod_I(a) == reduce_mod_I(b)
    assert reduce_mod_I(SchurExpr.of([(2, 1)], N)) == SchurExpr.of([(2, 1)], N)
    assert reduce_mod_I(a + b).render() == "0"


@pytest.mark.parametrize("j", range(1, 6))
def test_even_power_sums_vanish_mod_I(basis, j):
    assert reduce_mod_I(basis.to_schur(PowerSumTable(N)[2 * j])).render() == "0"
