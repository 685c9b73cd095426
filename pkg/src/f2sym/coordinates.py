"""Power sums, the mixed coordinates {p_odd, w_even}, and standard forms.

The standard form writes an element of R in the basis

    p * a * dd(w_{2 i_1}) * ... * dd(w_{2 i_n}),   i_1 <= ... <= i_n,

with p a square-free monomial in the odd power sums and a a square-free
monomial in the even w's. The decomposition is computed degree by degree by
inverting the (square, invertible) matrix of basis evaluations over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .gf2 import Echelon
from .involution import OmegaTable
from .partitions import enumerate_partitions
from .ring import (Monomial, ParseError, Poly, TruncationError, exponent_vector, monomial_basis,
                   parse_terms, poly_sum, render_monomial)


class PowerSumTable:
    """p_k in w-coordinates for 1 <= k <= N.

    Over GF(2) the Newton identity k*w_k = sum_{j<k} p_{k-j} w_j gives, for odd k,
    p_k = w_k + sum_{j=1}^{k-1} p_{k-j} w_j. Even power sums use p_{2k} = p_k^2.
    """

    def __init__(self, max_degree: int) -> None:
        if max_degree < 1:
            raise ValueError("max degree must be at least 1")
        n = max_degree
        self.max_degree = n
        p: list[Poly] = [Poly.zero(n)]
        for k in range(1, n + 1):
            if k % 2:
                acc = Poly.gen(k, n)
                for j in range(1, k):
                    acc = acc + p[k - j] * Poly.gen(j, n)
                p.append(acc)
            else:
                p.append(p[k // 2].square())
        self.p: tuple[Poly, ...] = tuple(p)

    def __getitem__(self, k: int) -> Poly:
        if not 1 <= k <= self.max_degree:
            raise TruncationError(f"p{k} is outside 1..{self.max_degree}")
        return self.p[k]


def build_power_sums(max_degree: int, table: OmegaTable | None = None) -> PowerSumTable:
    if table is not None and table.max_degree != max_degree:
        raise TruncationError("omega table truncated at a different degree")
    return PowerSumTable(max_degree)


class MixedCoordinates:
    """Ring isomorphism between w-coordinates and {p1, w2, p3, w4, ...}."""

    def __init__(self, power_sums: PowerSumTable) -> None:
        n = power_sums.max_degree
        self.max_degree = n
        self.power_sums = power_sums

        def mgen(i: int) -> Poly:
            return Poly.gen(i, n, "mixed")

        def p_mixed(k: int) -> Poly:
            odd, power = k, 1
            while odd % 2 == 0:
                odd //= 2
                power *= 2
            return mgen(odd) ** power

        # w_k in mixed coordinates; odd k solved from p_k = w_k + sum p_{k-j} w_j
        w_mixed: list[Poly] = [Poly.one(n, "mixed")]
        for k in range(1, n + 1):
            if k % 2 == 0:
                w_mixed.append(mgen(k))
            else:
                acc = mgen(k)
                for j in range(1, k):
                    acc = acc + p_mixed(k - j) * w_mixed[j]
                w_mixed.append(acc)
        self.w_mixed = tuple(w_mixed)
        self.gen_w = tuple(
            Poly.one(n) if i == 0 else (power_sums[i] if i % 2 else Poly.gen(i, n))
            for i in range(n + 1))
        self._to: dict[Monomial, Poly] = {(): w_mixed[0]}
        self._from: dict[Monomial, Poly] = {(): Poly.one(n)}

    def _mono_to(self, m: Monomial) -> Poly:
        got = self._to.get(m)
        if got is None:
            got = self._mono_to(m[:-1]) * self.w_mixed[m[-1]]
            self._to[m] = got
        return got

    def _mono_from(self, m: Monomial) -> Poly:
        got = self._from.get(m)
        if got is None:
            got = self._mono_from(m[:-1]) * self.gen_w[m[-1]]
            self._from[m] = got
        return got

    def to_mixed(self, x: Poly) -> Poly:
        if x.coords != "w":
            raise ValueError("expected an element in w-coordinates")
        return poly_sum((self._mono_to(m) for m in x.terms), self.max_degree, "mixed")

    def from_mixed(self, y: Poly) -> Poly:
        if y.coords != "mixed":
            raise ValueError("expected an element in mixed coordinates")
        return poly_sum((self._mono_from(m) for m in y.terms), self.max_degree)


@dataclass(frozen=True, order=True)
class StandardFormTerm:
    """p_part: distinct odd indices; a_part: distinct even indices; d_part: weakly increasing i's."""

    p_part: tuple[int, ...] = ()
    a_part: tuple[int, ...] = ()
    d_part: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        p, a, d = self.p_part, self.a_part, self.d_part
        if any(i % 2 == 0 for i in p) or len(set(p)) != len(p) or list(p) != sorted(p):
            raise ValueError(f"p-part must be increasing distinct odd indices: {p}")
        if any(i % 2 for i in a) or len(set(a)) != len(a) or list(a) != sorted(a):
            raise ValueError(f"a-part must be increasing distinct even indices: {a}")
        if any(i < 1 for i in d) or list(d) != sorted(d):
            raise ValueError(f"d-part must be weakly increasing positive: {d}")

    @property
    def degree(self) -> int:
        return sum(self.p_part) + sum(self.a_part) + 2 * sum(self.d_part)

    def sort_key(self) -> tuple:
        return (self.degree, exponent_vector(self.p_part), exponent_vector(self.a_part),
                exponent_vector(self.d_part))

    def render(self) -> str:
        parts = []
        if self.p_part:
            parts.append(render_monomial(self.p_part, "mixed"))
        if self.a_part:
            parts.append(render_monomial(self.a_part, "mixed"))
        parts.extend(f"d[w{2 * i}]" for i in self.d_part)
        return "*".join(parts) if parts else "1"

    __str__ = render


@dataclass(frozen=True)
class StandardForm:
    terms: frozenset[StandardFormTerm]
    max_degree: int

    def __add__(self, other: "StandardForm") -> "StandardForm":
        if self.max_degree != other.max_degree:
            raise TruncationError("truncation mismatch")
        return StandardForm(self.terms ^ other.terms, self.max_degree)

    def sorted_terms(self) -> list[StandardFormTerm]:
        return sorted(self.terms, key=StandardFormTerm.sort_key, reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(t.render() for t in self.sorted_terms())

    __str__ = render


def _distinct_partitions(n: int, largest: int) -> Iterable[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _distinct_partitions(n - first, first - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def standard_form_terms(d: int) -> tuple[StandardFormTerm, ...]:
    """All standard-form basis terms of degree d, canonical order."""
    out = []
    for half in range(d // 2 + 1):
        for dpart in enumerate_partitions(half):
            rest = d - 2 * half
            for distinct in _distinct_partitions(rest, rest):
                parts = sorted(distinct)
                out.append(StandardFormTerm(
                    tuple(i for i in parts if i % 2),
                    tuple(i for i in parts if i % 2 == 0),
                    tuple(sorted(dpart))))
    out.sort(key=StandardFormTerm.sort_key, reverse=True)
    return tuple(out)


class StandardFormSolver:
    """Per-degree change of basis between w-monomials and standard-form terms."""

    def __init__(self, table: OmegaTable, power_sums: PowerSumTable | None = None) -> None:
        self.table = table
        self.max_degree = table.max_degree
        self.power_sums = power_sums or PowerSumTable(table.max_degree)
        self._inverse: dict[int, dict[Monomial, frozenset[StandardFormTerm]]] = {}
        self._eval: dict[StandardFormTerm, Poly] = {}

    def evaluate_term(self, t: StandardFormTerm) -> Poly:
        got = self._eval.get(t)
        if got is None:
            n = self.max_degree
            if t.degree > n:
                raise TruncationError(f"term {t} exceeds max degree {n}")
            got = Poly.monomial(t.a_part, n)
            for i in t.p_part:
                got = got * self.power_sums[i]
            for i in t.d_part:
                got = got * self.table.dd(Poly.gen(2 * i, n))
            self._eval[t] = got
        return got

    def inverse(self, d: int) -> dict[Monomial, frozenset[StandardFormTerm]]:
        """Map each degree-d w-monomial to its standard form (as a term set)."""
        got = self._inverse.get(d)
        if got is not None:
            return got
        if d > self.max_degree:
            raise TruncationError(f"degree {d} exceeds max degree {self.max_degree}")
        terms = standard_form_terms(d)
        k = len(terms)
        ech = Echelon()
        for j, t in enumerate(terms):
            ech.add((self.evaluate_term(t).to_vector(d) << k) | (1 << j))
        rows = ech.reduced_rows()
        basis = monomial_basis(d)
        if len(basis) != k or any(r >> k == 0 for r in rows) or len(rows) != k:
            raise ArithmeticError(f"standard-form terms do not form a basis in degree {d}")
        low = (1 << k) - 1
        got = {}
        for r in rows:
            high = r >> k
            if high & (high - 1):
                raise ArithmeticError(f"standard-form matrix is singular in degree {d}")
            combo = r & low
            got[basis[high.bit_length() - 1]] = frozenset(
                terms[b] for b in range(k) if (combo >> b) & 1)
        self._inverse[d] = got
        return got

    def decompose(self, x: Poly) -> StandardForm:
        if x.coords != "w":
            raise ValueError("standard form expects w-coordinates")
        if x.max_degree != self.max_degree:
            raise TruncationError("truncation mismatch")
        acc: frozenset[StandardFormTerm] = frozenset()
        for m in x.terms:
            acc = acc ^ self.inverse(sum(m))[m]
        return StandardForm(acc, self.max_degree)

    def evaluate(self, s: StandardForm) -> Poly:
        return poly_sum((self.evaluate_term(t) for t in s.terms), self.max_degree)


def to_mixed_coordinates(x: Poly, coords: MixedCoordinates) -> Poly:
    return coords.to_mixed(x)


def from_mixed_coordinates(y: Poly, coords: MixedCoordinates) -> Poly:
    return coords.from_mixed(y)


def standard_form(x: Poly, solver: StandardFormSolver) -> StandardForm:
    return solver.decompose(x)


def evaluate_standard_form(s: StandardForm, solver: StandardFormSolver) -> Poly:
    return solver.evaluate(s)


def evaluate_text(text: str, power_sums: PowerSumTable) -> Poly:
    """Parse text that may mix w's and p's, and return the w-coordinate element.

    Each p_k is replaced by its expansion in the w's.
    """
    n = power_sums.max_degree
    terms = parse_terms(text)
    out = Poly.zero(n)
    for term in terms:
        degree = sum(idx * exp for _, idx, exp, _ in term)
        if degree > n:
            raise TruncationError(f"term of degree {degree} exceeds max degree {n}")
        prod = Poly.one(n)
        for kind, idx, exp, at in term:
            if kind == "w":
                base = Poly.gen(idx, n)
            elif kind == "p":
                base = power_sums[idx]
            else:
                raise ParseError(f"unknown generator {kind}", text, at)
            prod = prod * base ** exp
        out = out + prod
    return out
