"""The omega involution on R, the differential dd = 1 + omega, and the norm."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .ring import Monomial, Poly, TruncationError, poly_sum


class OmegaTable:
    """omega(w_k) for 1 <= k <= N, plus a memo of omega on monomials.

    Built from sum_{i=0}^{k} w_i * omega(w_{k-i}) = 0 with w_0 = omega(w_0) = 1,
    which isolates omega(w_k) = sum_{i=1}^{k} w_i * omega(w_{k-i}).
    """

    def __init__(self, max_degree: int) -> None:
        if max_degree < 1:
            raise ValueError("max degree must be at least 1")
        n = max_degree
        self.max_degree = n
        wbar = [Poly.one(n)]
        for k in range(1, n + 1):
            wbar.append(poly_sum((Poly.gen(i, n) * wbar[k - i] for i in range(1, k + 1)), n))
        self.wbar: tuple[Poly, ...] = tuple(wbar)
        self._memo: dict[Monomial, Poly] = {(): wbar[0]}

    def omega_monomial(self, m: Monomial) -> Poly:
        got = self._memo.get(m)
        if got is None:
            got = self.omega_monomial(m[:-1]) * self.wbar[m[-1]]
            self._memo[m] = got
        return got

    def omega(self, x: Poly) -> Poly:
        self._check(x)
        return poly_sum((self.omega_monomial(m) for m in x.terms), self.max_degree)

    def dd(self, x: Poly) -> Poly:
        return x + self.omega(x)

    def norm(self, x: Poly) -> Poly:
        return x * self.omega(x)

    def _check(self, x: Poly) -> None:
        if x.max_degree != self.max_degree:
            raise TruncationError(
                f"element truncated at {x.max_degree}, table at {self.max_degree}")
        if x.coords != "w":
            raise ValueError("omega acts on elements written in w-coordinates")


def build_omega_table(max_degree: int) -> OmegaTable:
    return OmegaTable(max_degree)


def omega(x: Poly, table: OmegaTable) -> Poly:
    return table.omega(x)


def dd(x: Poly, table: OmegaTable) -> Poly:
    """d x = x + omega(x)."""
    return table.dd(x)


def norm(x: Poly, table: OmegaTable) -> Poly:
    """N(x) = x * omega(x)."""
    return table.norm(x)


def product(xs: Sequence[Poly], max_degree: int) -> Poly:
    out = Poly.one(max_degree)
    for x in xs:
        out = out * x
    return out


def thick_leibniz_defect(xs: Sequence[Poly], table: OmegaTable) -> Poly:
    """d(x_1...x_n) + sum over nonempty T of x_{T^c} * prod_{i in T} d(x_i); always 0."""
    if not xs:
        raise ValueError("need at least one factor")
    n = table.max_degree
    dxs = [table.dd(x) for x in xs]
    acc = table.dd(product(xs, n))
    idx = range(len(xs))
    for size in range(1, len(xs) + 1):
        for subset in combinations(idx, size):
            chosen = set(subset)
            term = product([dxs[i] if i in chosen else xs[i] for i in idx], n)
            acc = acc + term
    return acc


def formal_w(max_degree: int, plus_one: bool = False) -> Poly:
    """Truncation of W = w1 + w2 + ... (or W+ = 1 + W)."""
    w = poly_sum((Poly.gen(i, max_degree) for i in range(1, max_degree + 1)), max_degree)
    return w + Poly.one(max_degree) if plus_one else w
