"""The truncated graded ring F2[w1, w2, ...] with deg(w_i) = i.

A monomial is stored as the ascending tuple of generator indices with
multiplicity, so ``w1^2*w3`` is ``(1, 1, 3)``. This is a sorted multiset
encoding of the exponent map; multiplication is a merge, degree is a sum,
and the tuple read in reverse is the partition of the degree that indexes
the monomial.

A :class:`Poly` is a frozenset of monomials (GF(2) coefficients are
presence or absence) living in R_{<=N}: every product term of degree above
``max_degree`` is dropped. Since everything downstream is graded this loses
nothing in degrees <= N.

The same storage serves the mixed coordinates {p1, w2, p3, w4, ...}: there
the generator with odd index i is the power sum p_i and even index i is w_i.
The ``coords`` tag only changes names on output and guards against adding
elements written in different coordinate systems.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator

from .partitions import enumerate_partitions

Monomial = tuple[int, ...]

ONE: Monomial = ()

DEFAULT_MAX_DEGREE = 12

COORDS = ("w", "mixed")

GENERATOR_SETS = ("all", "even", "odd", "mixed")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class TruncationError(ValueError):
    """An element of degree above the truncation bound was requested."""


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def mono_from_exponents(exps: dict[int, int]) -> Monomial:
    out: list[int] = []
    for i in sorted(exps):
        e = exps[i]
        if i < 1 or e < 0:
            raise ValueError(f"bad exponent pair ({i}, {e})")
        out.extend([i] * e)
    return tuple(out)


def mono_exponents(m: Monomial) -> list[tuple[int, int]]:
    """Sorted (index, exponent) pairs."""
    return sorted(Counter(m).items())


def exponent_vector(m: Monomial) -> tuple[int, ...]:
    if not m:
        return ()
    vec = [0] * m[-1]
    for i in m:
        vec[i - 1] += 1
    return tuple(vec)


def mono_sort_key(m: Monomial) -> tuple:
    """Ascending key; canonical order is descending in (degree, exponent vector from w1 up)."""
    return (sum(m), exponent_vector(m))


def gen_name(i: int, coords: str) -> str:
    if coords == "mixed" and i % 2 == 1:
        return f"p{i}"
    return f"w{i}"


def render_monomial(m: Monomial, coords: str = "w") -> str:
    if not m:
        return "1"
    parts = []
    for i, e in mono_exponents(m):
        name = gen_name(i, coords)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def is_square_free(m: Monomial, generators: str = "all") -> bool:
    """True iff no generator from the named set occurs more than once in m."""
    if generators not in GENERATOR_SETS:
        raise ValueError(f"unknown generator set {generators!r}")
    for a, b in zip(m, m[1:]):
        if a == b and _in_set(a, generators):
            return False
    return True


def _in_set(i: int, generators: str) -> bool:
    if generators == "even":
        return i % 2 == 0
    if generators == "odd":
        return i % 2 == 1
    return True


@lru_cache(maxsize=None)
def _basis_cached(d: int, generators: str) -> tuple[Monomial, ...]:
    monos = []
    for lam in enumerate_partitions(d):
        if all(_in_set(i, generators) for i in lam):
            monos.append(tuple(reversed(lam)))
    monos.sort(key=mono_sort_key, reverse=True)
    return tuple(monos)


def monomial_basis(d: int, generators: str = "all") -> list[Monomial]:
    """All monomials of degree d in the named generator set, canonical order.

    ``"mixed"`` names the coordinates {p_odd, w_even}; its monomials have the
    same index multisets as ``"all"``.
    """
    if generators not in GENERATOR_SETS:
        raise ValueError(f"unknown generator set {generators!r}")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return list(_basis_cached(d, generators))


@lru_cache(maxsize=None)
def basis_index(d: int, generators: str = "all") -> dict[Monomial, int]:
    return {m: j for j, m in enumerate(_basis_cached(d, generators))}


class Poly:
    """Element of R_{<=N} over GF(2)."""

    __slots__ = ("terms", "max_degree", "coords")

    def __init__(self, terms: Iterable[Monomial] = (), max_degree: int = DEFAULT_MAX_DEGREE,
                 coords: str = "w") -> None:
        if coords not in COORDS:
            raise ValueError(f"unknown coordinates {coords!r}")
        acc: set[Monomial] = set()
        for m in terms:
            m = tuple(m)
            if sum(m) > max_degree:
                raise TruncationError(f"monomial of degree {sum(m)} exceeds max degree {max_degree}")
            acc ^= {m}
        self.terms = frozenset(acc)
        self.max_degree = max_degree
        self.coords = coords

    @classmethod
    def _raw(cls, terms: frozenset, max_degree: int, coords: str) -> "Poly":
        p = object.__new__(cls)
        p.terms = terms
        p.max_degree = max_degree
        p.coords = coords
        return p

    @classmethod
    def zero(cls, max_degree: int = DEFAULT_MAX_DEGREE, coords: str = "w") -> "Poly":
        return cls._raw(frozenset(), max_degree, coords)

    @classmethod
    def one(cls, max_degree: int = DEFAULT_MAX_DEGREE, coords: str = "w") -> "Poly":
        return cls._raw(frozenset([ONE]), max_degree, coords)

    @classmethod
    def gen(cls, i: int, max_degree: int = DEFAULT_MAX_DEGREE, coords: str = "w") -> "Poly":
        if i < 1:
            raise ValueError("generator index must be positive")
        return cls([(i,)], max_degree, coords)

    @classmethod
    def monomial(cls, m: Monomial, max_degree: int = DEFAULT_MAX_DEGREE, coords: str = "w") -> "Poly":
        return cls([m], max_degree, coords)

    def _check(self, other: "Poly") -> None:
        if self.max_degree != other.max_degree:
            raise TruncationError(
                f"truncation mismatch: {self.max_degree} vs {other.max_degree}")
        if self.coords != other.coords:
            raise ValueError(f"coordinate mismatch: {self.coords} vs {other.coords}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly._raw(self.terms ^ other.terms, self.max_degree, self.coords)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.terms or not other.terms:
            return Poly._raw(frozenset(), self.max_degree, self.coords)
        if other.terms == {ONE}:
            return self
        if self.terms == {ONE}:
            return other
        n = self.max_degree
        right = [(m, sum(m)) for m in other.terms]
        acc: set[Monomial] = set()
        add, discard = acc.add, acc.discard
        for a in self.terms:
            da = sum(a)
            for b, db in right:
                if da + db <= n:
                    m = tuple(sorted(a + b))
                    if m in acc:
                        discard(m)
                    else:
                        add(m)
        return Poly._raw(frozenset(acc), n, self.coords)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.one(self.max_degree, self.coords)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def square(self) -> "Poly":
        """Frobenius: squaring is additive in characteristic 2."""
        n = self.max_degree
        return Poly._raw(
            frozenset(tuple(sorted(m + m)) for m in self.terms if 2 * sum(m) <= n),
            n, self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.terms == other.terms and self.max_degree == other.max_degree
                and self.coords == other.coords)

    def __hash__(self) -> int:
        return hash((self.terms, self.max_degree, self.coords))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_terms())

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def degree(self) -> int:
        """Top degree; -1 for the zero element."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def graded_component(self, d: int) -> "Poly":
        if d > self.max_degree:
            raise TruncationError(f"degree {d} exceeds max degree {self.max_degree}")
        return Poly._raw(frozenset(m for m in self.terms if sum(m) == d), self.max_degree, self.coords)

    def truncate(self, n: int) -> "Poly":
        """Re-home the element in R_{<=n}, dropping terms above n."""
        return Poly._raw(frozenset(m for m in self.terms if sum(m) <= n), n, self.coords)

    def with_coords(self, coords: str) -> "Poly":
        """Relabel without rewriting; only meaningful for elements of PS[w_even] etc."""
        return Poly._raw(self.terms, self.max_degree, coords)

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=mono_sort_key, reverse=True)

    def to_vector(self, d: int) -> int:
        """Bitset of the degree-d component over monomial_basis(d)."""
        idx = basis_index(d)
        v = 0
        for m in self.terms:
            if sum(m) == d:
                v |= 1 << idx[m]
        return v

    @classmethod
    def from_vector(cls, v: int, d: int, max_degree: int = DEFAULT_MAX_DEGREE,
                    coords: str = "w") -> "Poly":
        basis = _basis_cached(d, "all")
        terms = []
        while v:
            low = v & -v
            terms.append(basis[low.bit_length() - 1])
            v ^= low
        return cls._raw(frozenset(terms), max_degree, coords)

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_monomial(m, self.coords) for m in self.sorted_terms())

    __str__ = render

    def __repr__(self) -> str:
        return f"Poly({self.render()!r}, N={self.max_degree}, coords={self.coords!r})"


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def graded_component(x: Poly, d: int) -> Poly:
    return x.graded_component(d)


def poly_sum(items: Iterable[Poly], max_degree: int, coords: str = "w") -> Poly:
    acc: set[Monomial] = set()
    for p in items:
        acc ^= p.terms
    return Poly._raw(frozenset(acc), max_degree, coords)


# --- text format -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<gen>[wp])(?P<idx>\d+)(?:\s*\^\s*(?P<exp>\d+))?|(?P<one>1)(?!\d)|(?P<zero>0)(?!\d))")

Factor = tuple[str, int, int, int]


def parse_terms(text: str) -> list[list[Factor]]:
    """Syntax-only parse into terms, each a list of (kind, index, exponent, position).

    ``"0"`` is the empty list. ``"1"`` is accepted as the unit term.
    """
    s = text
    pos = 0
    n = len(s)

    def skip_ws(p: int) -> int:
        while p < n and s[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty input", text, pos)
    m = _TOKEN.match(s, pos)
    if m and m.group("zero") is not None:
        end = skip_ws(m.end())
        if end != n:
            raise ParseError("unexpected text after 0", text, end)
        return []

    terms: list[list[Factor]] = []
    while True:
        factors: list[Factor] = []
        while True:
            pos = skip_ws(pos)
            m = _TOKEN.match(s, pos)
            if not m or m.group("zero") is not None:
                raise ParseError("expected a generator like w3 or p1", text, pos)
            if m.group("one") is not None:
                factors.append(("1", 0, 0, m.start()))
            else:
                idx = int(m.group("idx"))
                exp = int(m.group("exp")) if m.group("exp") is not None else 1
                if idx == 0:
                    raise ParseError("generator index 0 is not allowed", text, m.start("idx"))
                if exp == 0:
                    raise ParseError("exponent 0 is not allowed", text, m.start("exp"))
                factors.append((m.group("gen"), idx, exp, m.start("gen")))
            pos = skip_ws(m.end())
            if pos < n and s[pos] == "*":
                pos += 1
                continue
            break
        terms.append([f for f in factors if f[0] != "1"])
        if pos == n:
            return terms
        if s[pos] != "+":
            raise ParseError("expected '+' or '*'", text, pos)
        pos += 1


def parse_poly(text: str, max_degree: int = DEFAULT_MAX_DEGREE, coords: str = "w") -> Poly:
    """Parse a polynomial written in the given coordinates.

    In ``"w"`` coordinates only w generators are allowed. In ``"mixed"``
    coordinates the generators are p_odd and w_even; p_k with k = 2^a * m
    (m odd) is read as p_m^(2^a).
    """
    acc: set[Monomial] = set()
    for term in parse_terms(text):
        exps: Counter[int] = Counter()
        for kind, idx, exp, at in term:
            if coords == "w":
                if kind != "w":
                    raise ParseError(f"{kind}{idx} is not a w-coordinate", text, at)
                exps[idx] += exp
            else:
                if kind == "w":
                    if idx % 2:
                        raise ParseError(f"w{idx} is not a mixed coordinate (use p{idx})", text, at)
                    exps[idx] += exp
                else:
                    odd, power = idx, 1
                    while odd % 2 == 0:
                        odd //= 2
                        power *= 2
                    exps[odd] += exp * power
        mono = mono_from_exponents(dict(exps))
        if sum(mono) > max_degree:
            raise TruncationError(
                f"term of degree {sum(mono)} exceeds max degree {max_degree}")
        acc ^= {mono}
    return Poly._raw(frozenset(acc), max_degree, coords)


def parse(text: str, max_degree: int = DEFAULT_MAX_DEGREE) -> Poly:
    return parse_poly(text, max_degree, "w")


def render(x: Poly) -> str:
    return x.render()
