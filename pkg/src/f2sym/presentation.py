"""Generators and relations for the invariant ring S.

F is the free commutative PS-algebra on symbols D[a], one for each
square-free monomial a in the even w's of positive degree; PS itself is the
polynomial ring in the odd power sums. Relations:

* for odd k:  p_k^2 + sum_{i=0}^{(k-1)/2} [D(w_{2i} w_{2(k-i)}) + D(w_{2i}) D(w_{2(k-i)})]
* for square-free even-w monomials x, y, z:
  D(yz) D(x) + D(xz) D(y) + D(xy) D(z) + D(x) D(y) D(z)

D of an arbitrary element is defined through its standard form
p * a * dd(w_{2i_1}) ... dd(w_{2i_n})  ->  p * D(a) * D(w_{2i_1}) ... D(w_{2i_n}),
with terms where a = 1 dropped. The check compares dim (F / relations)_d
with dim S_d and verifies that D(a) -> dd(a), p_k -> p_k maps onto S_d
and kills every relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from .coordinates import PowerSumTable, StandardFormSolver
from .gf2 import Echelon, GradedSubspace
from .involution import OmegaTable
from .ring import Monomial, Poly, TruncationError, exponent_vector, poly_sum, render_monomial
from .verifier import CheckReport, DegreeResult, GradedIdealFamily

DeltaGen = tuple[int, ...]
# (odd power-sum indices with multiplicity, delta generators with multiplicity), both sorted
FMonomial = tuple[tuple[int, ...], tuple[DeltaGen, ...]]

F_ONE: FMonomial = ((), ())


def delta_degree(a: DeltaGen) -> int:
    return sum(a)


def delta_key(a: DeltaGen) -> tuple:
    return (sum(a), a)


def fmono_degree(m: FMonomial) -> int:
    return sum(m[0]) + sum(sum(a) for a in m[1])


def fmono_mul(x: FMonomial, y: FMonomial) -> FMonomial:
    return (tuple(sorted(x[0] + y[0])), tuple(sorted(x[1] + y[1], key=delta_key)))


def render_delta(a: DeltaGen) -> str:
    return "D[" + "*".join(f"w{i}" for i in a) + "]"


def render_fmonomial(m: FMonomial) -> str:
    parts = []
    if m[0]:
        parts.append(render_monomial(m[0], "mixed"))
    parts.extend(render_delta(a) for a in sorted(m[1], key=delta_key, reverse=True))
    return "*".join(parts) if parts else "1"


def fmono_sort_key(m: FMonomial) -> tuple:
    return (fmono_degree(m), exponent_vector(m[0]),
            tuple(delta_key(a) for a in sorted(m[1], key=delta_key, reverse=True)))


def is_delta_generator(a: Iterable[int]) -> bool:
    a = tuple(a)
    return bool(a) and all(i % 2 == 0 and i > 0 for i in a) and list(a) == sorted(set(a))


class FPoly:
    """GF(2) combination of F-monomials, truncated above ``max_degree``."""

    __slots__ = ("terms", "max_degree")

    def __init__(self, terms: Iterable[FMonomial] = (), max_degree: int = 10) -> None:
        acc: set[FMonomial] = set()
        for m in terms:
            p, ds = m
            m = (tuple(sorted(p)), tuple(sorted((tuple(a) for a in ds), key=delta_key)))
            if any(i % 2 == 0 for i in m[0]) or not all(is_delta_generator(a) for a in m[1]):
                raise ValueError(f"not an F-monomial: {m}")
            if fmono_degree(m) > max_degree:
                raise TruncationError(f"F-monomial of degree {fmono_degree(m)} exceeds {max_degree}")
            acc ^= {m}
        self.terms = frozenset(acc)
        self.max_degree = max_degree

    @classmethod
    def _raw(cls, terms: frozenset, max_degree: int) -> "FPoly":
        f = object.__new__(cls)
        f.terms = terms
        f.max_degree = max_degree
        return f

    @classmethod
    def zero(cls, max_degree: int) -> "FPoly":
        return cls._raw(frozenset(), max_degree)

    @classmethod
    def one(cls, max_degree: int) -> "FPoly":
        return cls._raw(frozenset([F_ONE]), max_degree)

    @classmethod
    def p(cls, k: int, max_degree: int) -> "FPoly":
        if k < 1 or k % 2 == 0:
            raise ValueError("only odd power sums are generators of F")
        return cls([((k,), ())], max_degree)

    @classmethod
    def delta(cls, a: Iterable[int], max_degree: int) -> "FPoly":
        return cls([((), (tuple(a),))], max_degree)

    def _check(self, other: "FPoly") -> None:
        if self.max_degree != other.max_degree:
            raise TruncationError("truncation mismatch")

    def __add__(self, other: "FPoly") -> "FPoly":
        self._check(other)
        return FPoly._raw(self.terms ^ other.terms, self.max_degree)

    def __mul__(self, other: "FPoly") -> "FPoly":
        self._check(other)
        n = self.max_degree
        acc: set[FMonomial] = set()
        right = [(b, fmono_degree(b)) for b in other.terms]
        for a in self.terms:
            da = fmono_degree(a)
            for b, db in right:
                if da + db <= n:
                    m = fmono_mul(a, b)
                    if m in acc:
                        acc.discard(m)
                    else:
                        acc.add(m)
        return FPoly._raw(frozenset(acc), n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FPoly):
            return NotImplemented
        return self.terms == other.terms and self.max_degree == other.max_degree

    def __hash__(self) -> int:
        return hash((self.terms, self.max_degree))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {fmono_degree(m) for m in self.terms}

    def sorted_terms(self) -> list[FMonomial]:
        return sorted(self.terms, key=fmono_sort_key, reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_fmonomial(m) for m in self.sorted_terms())

    __str__ = render

    def __repr__(self) -> str:
        return f"FPoly({self.render()!r})"


def enumerate_delta_generators(max_degree: int) -> list[DeltaGen]:
    """Square-free monomials in w_2, w_4, ... of degree 2..N, ordered by degree then lex."""
    out: list[DeltaGen] = []

    def grow(prefix: tuple[int, ...], start: int, total: int) -> None:
        if prefix:
            out.append(prefix)
        for i in range(start, max_degree + 1, 2):
            if total + i > max_degree:
                break
            grow(prefix + (i,), i + 2, total + i)

    grow((), 2, 0)
    out.sort(key=delta_key)
    return out


def f_generators(max_degree: int) -> list[tuple[str, object, int]]:
    """Generators of F as (kind, label, degree): odd p's first, then D's."""
    gens: list[tuple[str, object, int]] = [("p", k, k) for k in range(1, max_degree + 1, 2)]
    gens += [("D", a, delta_degree(a)) for a in enumerate_delta_generators(max_degree)]
    return gens


def f_monomial_basis(d: int, max_degree: int) -> list[FMonomial]:
    """All F-monomials of degree d, canonical order."""
    gens = [g for g in f_generators(max_degree) if g[2] <= d]
    out: list[FMonomial] = []

    def walk(idx: int, remaining: int, ps: list[int], ds: list[DeltaGen]) -> None:
        if remaining == 0:
            out.append((tuple(sorted(ps)), tuple(sorted(ds, key=delta_key))))
            return
        if idx == len(gens):
            return
        kind, label, deg = gens[idx]
        for mult in range(remaining // deg + 1):
            if kind == "p":
                walk(idx + 1, remaining - mult * deg, ps + [label] * mult, ds)
            else:
                walk(idx + 1, remaining - mult * deg, ps, ds + [label] * mult)

    walk(0, d, [], [])
    out.sort(key=fmono_sort_key, reverse=True)
    return out


@dataclass
class Relation:
    """A homogeneous relation; ``degree`` is nominal, so zero relations keep theirs."""

    kind: str
    label: str
    degree: int
    poly: FPoly


class Presentation:
    """The algebra F, its relations, and the comparison with S up to ``max_degree``."""

    def __init__(self, max_degree: int = 10, table: OmegaTable | None = None) -> None:
        self.max_degree = max_degree
        self.table = table if table is not None else OmegaTable(max_degree)
        if self.table.max_degree < max_degree:
            raise TruncationError("omega table is truncated below the presentation degree")
        n = self.table.max_degree
        self.power_sums = PowerSumTable(n)
        self.solver = StandardFormSolver(self.table, self.power_sums)
        self._basis: dict[int, list[FMonomial]] = {}
        self._ideal: dict[int, GradedSubspace] = {}
        self._eval: dict[FMonomial, Poly] = {}

    # -- delta -----------------------------------------------------------------

    def _lift(self, x: Poly) -> Poly:
        n = self.table.max_degree
        if x.max_degree == n:
            return x
        if x.degree() > self.max_degree:
            raise TruncationError("element exceeds the presentation degree")
        return Poly._raw(x.terms, n, x.coords)

    def delta_extended(self, x: Poly) -> FPoly:
        """D(x) through the standard form of x; linear in x."""
        x = self._lift(x)
        if x.degree() > self.max_degree:
            raise TruncationError("element exceeds the presentation degree")
        acc: set[FMonomial] = set()
        for t in self.solver.decompose(x).terms:
            if not t.a_part:
                continue
            m: FMonomial = (t.p_part, tuple(sorted([t.a_part] + [(2 * i,) for i in t.d_part],
                                                   key=delta_key)))
            acc ^= {m}
        return FPoly._raw(frozenset(acc), self.max_degree)

    def delta_of_monomial(self, m: Monomial) -> FPoly:
        return self.delta_extended(Poly.monomial(m, self.table.max_degree))

    # -- relations -------------------------------------------------------------

    def relation_p_squared(self, k: int) -> FPoly:
        if k < 1 or k % 2 == 0:
            raise ValueError("k must be odd")
        if 2 * k > self.max_degree:
            raise TruncationError(f"relation for p{k} has degree {2 * k} > {self.max_degree}")
        n = self.max_degree
        rel = FPoly([((k, k), ())], n)
        for i in range(0, (k - 1) // 2 + 1):
            lo, hi = 2 * i, 2 * (k - i)
            pair = tuple(sorted(j for j in (lo, hi) if j))
            rel = rel + self.delta_of_monomial(pair)
            if lo:
                rel = rel + self.delta_of_monomial((lo,)) * self.delta_of_monomial((hi,))
        return rel

    def relation_delta2(self, x: Iterable[int], y: Iterable[int], z: Iterable[int]) -> FPoly:
        x, y, z = tuple(x), tuple(y), tuple(z)
        for a in (x, y, z):
            if not is_delta_generator(a):
                raise ValueError(f"{a} is not a square-free even-w monomial")
        if sum(x) + sum(y) + sum(z) > self.max_degree:
            raise TruncationError("triple exceeds the presentation degree")

        def d(*parts: tuple[int, ...]) -> FPoly:
            return self.delta_of_monomial(tuple(sorted(sum(parts, ()))))

        dx, dy, dz = d(x), d(y), d(z)
        return d(y, z) * dx + d(x, z) * dy + d(x, y) * dz + dx * dy * dz

    @cached_property
    def relations(self) -> list[Relation]:
        out = []
        for k in range(1, self.max_degree // 2 + 1, 2):
            out.append(Relation("p2", f"p{k}", 2 * k, self.relation_p_squared(k)))
        gens = enumerate_delta_generators(self.max_degree)
        for x, y, z in combinations_with_replacement(gens, 3):
            if sum(x) + sum(y) + sum(z) <= self.max_degree:
                label = ",".join(render_delta(a) for a in (x, y, z))
                out.append(Relation("delta2", label, sum(x) + sum(y) + sum(z),
                                        self.relation_delta2(x, y, z)))
        return out

    # -- graded pieces ---------------------------------------------------------

    def basis(self, d: int) -> list[FMonomial]:
        got = self._basis.get(d)
        if got is None:
            got = f_monomial_basis(d, self.max_degree)
            self._basis[d] = got
        return got

    def to_vector(self, f: FPoly, d: int) -> int:
        index = {m: j for j, m in enumerate(self.basis(d))}
        v = 0
        for m in f.terms:
            if fmono_degree(m) == d:
                v |= 1 << index[m]
        return v

    def from_vector(self, v: int, d: int) -> FPoly:
        basis = self.basis(d)
        return FPoly._raw(frozenset(basis[j] for j in range(len(basis)) if (v >> j) & 1),
                          self.max_degree)

    def ideal(self, d: int, relations: list[Relation] | None = None) -> GradedSubspace:
        """Degree-d slice of the ideal generated by the relations."""
        if relations is None and d in self._ideal:
            return self._ideal[d]
        rels = self.relations if relations is None else relations
        basis = self.basis(d)
        index = {m: j for j, m in enumerate(basis)}
        ech = Echelon()
        for rel in rels:
            rd = rel.degree
            if not rel.poly or rd > d:
                continue
            for m in self.basis(d - rd):
                v = 0
                for t in rel.poly.terms:
                    v ^= 1 << index[fmono_mul(m, t)]
                ech.add(v)
        space = GradedSubspace(d, basis, ech.pivots.values())
        if relations is None:
            self._ideal[d] = space
        return space

    def stilde_graded_dim(self, d: int, relations: list[Relation] | None = None) -> int:
        return len(self.basis(d)) - self.ideal(d, relations).dim

    def in_ideal(self, f: FPoly) -> bool:
        return all(self.ideal(d).contains(self.to_vector(f, d)) for d in f.degrees())

    # -- evaluation F -> R ------------------------------------------------------

    def evaluate_monomial(self, m: FMonomial) -> Poly:
        got = self._eval.get(m)
        if got is None:
            n = self.table.max_degree
            got = Poly.one(n)
            for k in m[0]:
                got = got * self.power_sums[k]
            for a in m[1]:
                got = got * self.table.dd(Poly.monomial(a, n))
            self._eval[m] = got
        return got

    def evaluate(self, f: FPoly) -> Poly:
        return poly_sum((self.evaluate_monomial(m) for m in f.terms), self.table.max_degree)

    # -- the theorem check -----------------------------------------------------

    def verify(self, family: GradedIdealFamily | None = None,
               degrees: Iterable[int] | None = None) -> CheckReport:
        family = family or GradedIdealFamily(self.table)
        report = CheckReport("presentation")
        bad_relations = [r for r in self.relations if self.evaluate(r.poly)]
        for d in (range(self.max_degree + 1) if degrees is None else degrees):
            s = family.S(d)
            fdim = len(self.basis(d))
            stilde = self.stilde_graded_dim(d)
            images = [self.evaluate_monomial(m).to_vector(d) for m in self.basis(d)]
            outside = [v for v in images if not s.contains(v)]
            image = family.subspace(d, images)
            rels_here = [r for r in bad_relations if r.degree == d]
            ok = stilde == s.dim and not outside and image == s and not rels_here
            witness = None
            if rels_here:
                witness = f"relation {rels_here[0].label} evaluates to {self.evaluate(rels_here[0].poly)}"
            elif outside:
                witness = family.poly(outside[0], d).render()
            elif image != s:
                witness = family.poly(s.defect(image)[0], d).render()
            report.add(DegreeResult(d, ok, {"F": fdim, "ideal": fdim - stilde, "Stilde": stilde,
                                            "S": s.dim, "image": image.dim,
                                            "relations": sum(1 for r in self.relations
                                                             if r.degree == d)}, witness))
        return report


def verify_presentation(max_degree: int = 10, table: OmegaTable | None = None,
                        family: GradedIdealFamily | None = None) -> CheckReport:
    return Presentation(max_degree, table).verify(family)


def iter_relations(pres: Presentation) -> Iterator[Relation]:
    return iter(pres.relations)
