from __future__ import annotations

from hypothesis import given, strategies as st

from f2sym.exterior import count_cofactors, find_cofactor, top_form, wedge

N = 3
elements = st.integers(min_value=0, max_value=(1 << (1 << N)) - 1)


def test_generators_anticommute_to_zero_squares():
    v0, v1 = 1 << 0b001, 1 << 0b010
    assert wedge(v0, v0, N) == 0
    assert wedge(v0, v1, N) == 1 << 0b011
    assert wedge(v0, v1, N) == wedge(v1, v0, N)
    assert wedge(1, v0, N) == v0          # the unit is the empty monomial


@given(elements, elements, elements)
def test_wedge_is_associative_and_bilinear(x, y, z):
    assert wedge(wedge(x, y, N), z, N) == wedge(x, wedge(y, z, N), N)
    assert wedge(x, y ^ z, N) == wedge(x, y, N) ^ wedge(x, z, N)


@given(elements.filter(bool))
def test_every_nonzero_element_divides_the_top_form(x):
    y = find_cofactor(x, N)
    assert y is not None and wedge(x, y, N) == top_form(N)


def test_cofactor_counts_on_one_generator():
    unit, v0 = 1 << 0, 1 << 1
    assert count_cofactors(unit, 1) == 1            # only y = v0
    assert count_cofactors(v0, 1) == 2              # y = 1 or y = 1 + v0
    assert count_cofactors(unit | v0, 1) == 1       # units have a unique cofactor


@given(elements.filter(bool))
def test_cofactor_count_is_a_coset_size(x):
    # solutions of x ^ y = top form a coset of the annihilator of x
    ann = sum(1 for y in range(1 << (1 << N)) if wedge(x, y, N) == 0)
    assert count_cofactors(x, N) == ann
