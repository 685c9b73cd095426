"""The exterior algebra on n generators over GF(2), brute force.

Basis wedge monomials are subsets of {0..n-1}, encoded as n-bit masks S.
An element is a 2^n-bit mask whose bit S is the coefficient of v_S. Over
GF(2) signs vanish, so v_S ^ v_T = v_{S u T} when S, T are disjoint and 0
otherwise.
"""

from __future__ import annotations

from itertools import combinations


def wedge(x: int, y: int, n: int) -> int:
    out = 0
    size = 1 << n
    xs = [s for s in range(size) if (x >> s) & 1]
    for t in range(size):
        if not (y >> t) & 1:
            continue
        for s in xs:
            if not s & t:
                out ^= 1 << (s | t)
    return out


def top_form(n: int) -> int:
    return 1 << ((1 << n) - 1)


def _columns(x: int, n: int) -> list[int]:
    """x ^ v_T for every basis monomial T; y -> x ^ y is the XOR of columns over T in y."""
    return [wedge(x, 1 << t, n) for t in range(1 << n)]


def find_cofactor(x: int, n: int) -> int | None:
    """Some y with x ^ y equal to the top form, searched by increasing support size."""
    e = top_form(n)
    cols = _columns(x, n)
    size = 1 << n
    for weight in range(1, size + 1):
        for support in combinations(range(size), weight):
            acc = 0
            for t in support:
                acc ^= cols[t]
            if acc == e:
                return sum(1 << t for t in support)
    return None


def count_cofactors(x: int, n: int) -> int:
    """Number of y (out of all 2^(2^n)) with x ^ y equal to the top form."""
    e = top_form(n)
    cols = _columns(x, n)
    count = 0
    # Gray-code walk over all y; one XOR per step
    acc = 0
    if acc == e:
        count += 1
    for i in range(1, 1 << (1 << n)):
        bit = (i & -i).bit_length() - 1
        acc ^= cols[bit]
        if acc == e:
            count += 1
    return count
