"""Schur polynomials over GF(2).

Realization: w_i is read as the complete homogeneous h_i, so
s_lambda = det(w_{lambda_i - i + j}) (Jacobi-Trudi) with w_0 = 1 and
w_{<0} = 0. Over GF(2) the determinant is a plain sum over permutations,
so signs never enter. Reading w_i as e_i instead gives the same ring and
swaps s_lambda with s_{lambda^vee}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .gf2 import Echelon
from .partitions import (
    Partition, border_strip_additions, conjugate, enumerate_partitions, is_self_conjugate,
    parse_partition,
)
from .ring import DEFAULT_MAX_DEGREE, Monomial, Poly, TruncationError, monomial_basis, poly_sum


@dataclass(frozen=True)
class SchurExpr:
    """GF(2) combination of Schur polynomials, stored as a set of partitions."""

    terms: frozenset[Partition]
    max_degree: int = DEFAULT_MAX_DEGREE

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]], max_degree: int = DEFAULT_MAX_DEGREE) -> "SchurExpr":
        acc: set[Partition] = set()
        for p in parts:
            acc ^= {Partition(p)}
        for lam in acc:
            if lam.size > max_degree:
                raise TruncationError(f"s{lam} exceeds max degree {max_degree}")
        return cls(frozenset(acc), max_degree)

    def __add__(self, other: "SchurExpr") -> "SchurExpr":
        if self.max_degree != other.max_degree:
            raise TruncationError("truncation mismatch")
        return SchurExpr(self.terms ^ other.terms, self.max_degree)

    def graded_component(self, d: int) -> "SchurExpr":
        return SchurExpr(frozenset(t for t in self.terms if t.size == d), self.max_degree)

    def sorted_terms(self) -> list[Partition]:
        return sorted(self.terms, key=lambda lam: (lam.size, tuple(lam)), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"s{lam}" for lam in self.sorted_terms())

    __str__ = render


def parse_schur(text: str, max_degree: int = DEFAULT_MAX_DEGREE) -> SchurExpr:
    """Read ``"s[3,1] + s[2,2]"``; ``"0"`` is the empty sum."""
    s = text.strip()
    if s == "0":
        return SchurExpr(frozenset(), max_degree)
    parts = []
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk.startswith("s"):
            raise ValueError(f"expected a term like s[2,1], got {chunk!r}")
        parts.append(parse_partition(chunk[1:]))
    return SchurExpr.of(parts, max_degree)


def schur_in_w(lam: Iterable[int], max_degree: int = DEFAULT_MAX_DEGREE) -> Poly:
    """Jacobi-Trudi determinant det(w_{lambda_i - i + j}) over GF(2)."""
    lam = Partition(lam)
    if lam.size > max_degree:
        raise TruncationError(f"|{lam}| exceeds max degree {max_degree}")
    return _schur_cached(lam, max_degree)


@lru_cache(maxsize=None)
def _schur_cached(lam: Partition, n: int) -> Poly:
    ell = len(lam)
    one = Poly.one(n)
    gens = [one] + [Poly.gen(i, n) for i in range(1, n + 1)]

    def entry(r: int, c: int) -> Poly | None:
        k = lam[r] - r + c
        if k < 0:
            return None
        return gens[k]

    memo: dict[int, Poly] = {}

    def minor(used: int) -> Poly:
        # expand along row = number of columns already used
        if used in memo:
            return memo[used]
        r = used.bit_count()
        if r == ell:
            return one
        acc: set[Monomial] = set()
        for c in range(ell):
            if (used >> c) & 1:
                continue
            e = entry(r, c)
            if e is None:
                continue
            sub = minor(used | (1 << c))
            if sub:
                acc ^= (e * sub).terms
        out = Poly._raw(frozenset(acc), n, "w")
        memo[used] = out
        return out

    return minor(0)


def schur_from_expr(e: SchurExpr) -> Poly:
    return poly_sum((schur_in_w(lam, e.max_degree) for lam in e.terms), e.max_degree)


class SchurBasis:
    """Cached per-degree change of basis from w-monomials to Schur polynomials."""

    def __init__(self, max_degree: int = DEFAULT_MAX_DEGREE) -> None:
        self.max_degree = max_degree
        self._inverse: dict[int, dict[Monomial, frozenset[Partition]]] = {}

    def inverse(self, d: int) -> dict[Monomial, frozenset[Partition]]:
        got = self._inverse.get(d)
        if got is not None:
            return got
        if d > self.max_degree:
            raise TruncationError(f"degree {d} exceeds max degree {self.max_degree}")
        parts = enumerate_partitions(d)
        k = len(parts)
        ech = Echelon()
        for j, lam in enumerate(parts):
            ech.add((schur_in_w(lam, self.max_degree).to_vector(d) << k) | (1 << j))
        rows = ech.reduced_rows()
        basis = monomial_basis(d)
        low = (1 << k) - 1
        got = {}
        for r in rows:
            high = r >> k
            if not high or high & (high - 1):
                raise ArithmeticError(f"Schur polynomials are dependent in degree {d}")
            combo = r & low
            got[basis[high.bit_length() - 1]] = frozenset(
                parts[b] for b in range(k) if (combo >> b) & 1)
        if len(got) != len(basis):
            raise ArithmeticError(f"Schur polynomials do not span degree {d}")
        self._inverse[d] = got
        return got

    def to_schur(self, x: Poly) -> SchurExpr:
        if x.coords != "w":
            raise ValueError("expected w-coordinates")
        acc: frozenset[Partition] = frozenset()
        for m in x.terms:
            acc = acc ^ self.inverse(sum(m))[m]
        return SchurExpr(acc, self.max_degree)

    def from_schur(self, e: SchurExpr) -> Poly:
        return schur_from_expr(SchurExpr(e.terms, self.max_degree))


def to_schur_basis(x: Poly, basis: SchurBasis | None = None) -> SchurExpr:
    basis = basis or SchurBasis(x.max_degree)
    return basis.to_schur(x)


def omega_on_schur(e: SchurExpr) -> SchurExpr:
    return SchurExpr(frozenset(conjugate(lam) for lam in e.terms), e.max_degree)


def mn_multiply(k: int, e: SchurExpr) -> SchurExpr:
    """p_k * e by the Murnaghan-Nakayama rule; all border-strip signs are 1 mod 2."""
    if k < 1:
        raise ValueError("k must be positive")
    top = max((lam.size for lam in e.terms), default=0)
    if e.terms and k + top > e.max_degree:
        raise TruncationError(f"product degree {k + top} exceeds max degree {e.max_degree}")
    acc: set[Partition] = set()
    for lam in e.terms:
        for mu in border_strip_additions(lam, k):
            acc ^= {mu}
    return SchurExpr(frozenset(acc), e.max_degree)


def s_basis_of_S(d: int) -> list[int]:
    """Basis of S_d in Schur coordinates, as bitsets over enumerate_partitions(d).

    One vector per self-conjugate lambda, one per unordered pair {lambda, lambda^vee}.
    """
    parts = enumerate_partitions(d)
    index = {lam: j for j, lam in enumerate(parts)}
    out = []
    for j, lam in enumerate(parts):
        mu = conjugate(lam)
        if mu == lam:
            out.append(1 << j)
        elif index[mu] > j:
            out.append((1 << j) | (1 << index[mu]))
    return out


@lru_cache(maxsize=None)
def _image_of_d(d: int) -> Echelon:
    parts = enumerate_partitions(d)
    index = {lam: j for j, lam in enumerate(parts)}
    return Echelon((1 << j) | (1 << index[conjugate(lam)])
                   for j, lam in enumerate(parts) if not is_self_conjugate(lam))


def reduce_mod_I(e: SchurExpr) -> SchurExpr:
    """Canonical representative modulo span{s_lambda + s_lambda^vee}, degree by degree."""
    out: set[Partition] = set()
    for d in sorted({lam.size for lam in e.terms}):
        parts = enumerate_partitions(d)
        index = {lam: j for j, lam in enumerate(parts)}
        v = 0
        for lam in e.terms:
            if lam.size == d:
                v |= 1 << index[lam]
        r = _image_of_d(d).residue(v)
        out.update(parts[j] for j in range(len(parts)) if (r >> j) & 1)
    return SchurExpr(frozenset(out), e.max_degree)
