"""Degree-by-degree verification of the structural statements about R, S and I.

Every subspace lives in the degree-d piece R_d with the w-monomial basis
``monomial_basis(d)``; vectors are int bitsets over that basis. The family
computes each piece on demand and caches it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any, Iterable

from .coordinates import PowerSumTable, StandardFormSolver, standard_form_terms
from .exterior import count_cofactors, find_cofactor, top_form
from .gf2 import Echelon, GradedSubspace, map_kernel_image
from .involution import OmegaTable
from .partitions import (Partition, conjugate, count_self_conjugate, enumerate_partitions,
                         gamma_hook, is_self_conjugate, square_partition)
from .ring import Monomial, Poly, TruncationError, is_square_free, monomial_basis
from .schur import (SchurBasis, SchurExpr, mn_multiply, reduce_mod_I, schur_in_w,
                    to_schur_basis)


@dataclass
class DegreeResult:
    degree: int
    passed: bool
    dims: dict[str, int] = field(default_factory=dict)
    witness: str | None = None

    def to_dict(self, check: str) -> dict[str, Any]:
        out: dict[str, Any] = {"check": check, "degree": self.degree, "pass": self.passed,
                               "dims": dict(self.dims)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class CheckReport:
    check: str
    results: list[DegreeResult] = field(default_factory=list)
    status: str = "theorem"

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def degrees(self) -> list[int]:
        return [r.degree for r in self.results]

    def add(self, result: DegreeResult) -> None:
        self.results.append(result)

    def failures(self) -> list[DegreeResult]:
        return [r for r in self.results if not r.passed]

    def to_records(self) -> list[dict[str, Any]]:
        return [r.to_dict(self.check) for r in self.results]

    def to_dict(self) -> dict[str, Any]:
        out = {"check": self.check, "status": self.status, "pass": self.passed,
               "degrees": self.to_records()}
        if self.status == "evidence":
            out["note"] = "conjecture, not a theorem: computed evidence only"
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        if self.status == "evidence":
            tag = "EVIDENCE-" + tag
        lo = min(self.degrees, default=0)
        hi = max(self.degrees, default=0)
        return f"{tag} {self.check} (degrees {lo}..{hi})"


def vec_to_poly(v: int, d: int, n: int) -> Poly:
    return Poly.from_vector(v, d, n)


class GradedIdealFamily:
    """S_d, I_d, (I^n)_d, (RI^n)_d and Q(R)_d as subspaces of R_d, computed lazily."""

    def __init__(self, table: OmegaTable) -> None:
        self.table = table
        self.max_degree = table.max_degree
        self._cache: dict[tuple, GradedSubspace] = {}
        self._dd_images: dict[int, list[int]] = {}

    # -- helpers -------------------------------------------------------------

    def _check_degree(self, d: int) -> None:
        if not 0 <= d <= self.max_degree:
            raise TruncationError(f"degree {d} outside 0..{self.max_degree}")

    def basis(self, d: int) -> list[Monomial]:
        return monomial_basis(d)

    def subspace(self, d: int, vectors: Iterable[int]) -> GradedSubspace:
        return GradedSubspace(d, monomial_basis(d), vectors)

    def poly(self, v: int, d: int) -> Poly:
        return vec_to_poly(v, d, self.max_degree)

    def dd_images(self, d: int) -> list[int]:
        got = self._dd_images.get(d)
        if got is None:
            n = self.max_degree
            got = [self.table.dd(Poly.monomial(m, n)).to_vector(d) for m in monomial_basis(d)]
            self._dd_images[d] = got
        return got

    def _memo(self, key: tuple, build) -> GradedSubspace:
        got = self._cache.get(key)
        if got is None:
            got = build()
            self._cache[key] = got
        return got

    def _kernel_image(self, d: int) -> None:
        kern, image = map_kernel_image(self.dd_images(d))
        self._cache[("S", d)] = self.subspace(d, kern)
        self._cache[("I", d)] = self.subspace(d, image)

    # -- the subspaces -------------------------------------------------------

    def R(self, d: int) -> GradedSubspace:
        self._check_degree(d)
        return self._memo(("R", d), lambda: self.subspace(d, [1 << j for j in range(len(monomial_basis(d)))]))

    def S(self, d: int) -> GradedSubspace:
        self._check_degree(d)
        if ("S", d) not in self._cache:
            self._kernel_image(d)
        return self._cache[("S", d)]

    def I(self, d: int) -> GradedSubspace:
        self._check_degree(d)
        if ("I", d) not in self._cache:
            self._kernel_image(d)
        return self._cache[("I", d)]

    def I_power(self, n: int, d: int) -> GradedSubspace:
        """(I^n)_d: span of products of n elements of I."""
        self._check_degree(d)
        if n < 1:
            raise ValueError("need n >= 1")
        if n == 1:
            return self.I(d)

        def build() -> GradedSubspace:
            ech = Echelon()
            for e in range(1, d):
                lower = self.I(e)
                rest = self.I_power(n - 1, d - e)
                if not lower.dim or not rest.dim:
                    continue
                rest_polys = [self.poly(r, d - e) for r in rest.rows]
                for a in lower.rows:
                    pa = self.poly(a, e)
                    for pb in rest_polys:
                        ech.add((pa * pb).to_vector(d))
            return self.subspace(d, ech.pivots.values())

        return self._memo(("In", n, d), build)

    def RI_power(self, n: int, d: int) -> GradedSubspace:
        """(RI^n)_d: span of dd(w_k) * v for v in (RI^{n-1})_{d-k}, with RI^0 = R."""
        self._check_degree(d)
        if n < 0:
            raise ValueError("need n >= 0")
        if n == 0:
            return self.R(d)

        def build() -> GradedSubspace:
            ech = Echelon()
            big_n = self.max_degree
            for k in range(1, d + 1):
                dwk = self.table.dd(Poly.gen(k, big_n))
                if not dwk:
                    continue
                prev = self.RI_power(n - 1, d - k)
                for r in prev.rows:
                    ech.add((dwk * self.poly(r, d - k)).to_vector(d))
            return self.subspace(d, ech.pivots.values())

        return self._memo(("RIn", n, d), build)

    def RI(self, d: int) -> GradedSubspace:
        return self.RI_power(1, d)

    def Q(self, d: int) -> GradedSubspace:
        """Q(R)_d: span of m * w_i^2 over monomials m of degree d - 2i."""
        self._check_degree(d)

        def build() -> GradedSubspace:
            big_n = self.max_degree
            vecs = []
            for i in range(1, d // 2 + 1):
                sq = Poly.gen(i, big_n).square()
                for m in monomial_basis(d - 2 * i):
                    vecs.append((Poly.monomial(m, big_n) * sq).to_vector(d))
            return self.subspace(d, vecs)

        return self._memo(("Q", d), build)

    def S_plus_RI(self, n: int, d: int) -> GradedSubspace:
        return self._memo(("S+RIn", n, d), lambda: self.S(d) + self.RI_power(n, d))

    def preimage_of_I_power(self, n: int, d: int) -> GradedSubspace:
        """{x in R_d : dd(x) in (I^n)_d} as the kernel of R_d -> R_d / (I^n)_d."""
        target = self.I_power(n, d)
        residues = [target.residue(v) for v in self.dd_images(d)]
        kern, _ = map_kernel_image(residues)
        return self.subspace(d, kern)

    def build(self, degrees: Iterable[int], powers: int = 2) -> "GradedIdealFamily":
        """Eagerly fill the cache for the given degrees."""
        for d in degrees:
            self.S(d)
            self.Q(d)
            for n in range(1, powers + 1):
                self.I_power(n, d)
                self.RI_power(n, d)
        return self


def build_graded_family(max_degree: int, table: OmegaTable | None = None,
                        degrees: Iterable[int] | None = None) -> GradedIdealFamily:
    table = table or OmegaTable(max_degree)
    if table.max_degree != max_degree:
        raise TruncationError("table truncated at a different degree")
    fam = GradedIdealFamily(table)
    if degrees is not None:
        fam.build(degrees)
    return fam


def _witness(fam: GradedIdealFamily, vectors: list[int], d: int) -> str | None:
    return fam.poly(vectors[0], d).render() if vectors else None


def _degrees(fam: GradedIdealFamily, degrees: Iterable[int] | None) -> list[int]:
    return list(range(fam.max_degree + 1)) if degrees is None else list(degrees)


# -- checks ------------------------------------------------------------------

def check_transversality(n: int, fam: GradedIdealFamily,
                         degrees: Iterable[int] | None = None) -> CheckReport:
    """(RI^n)_d n S_d == (I^n)_d. For n >= 3 the report is only evidence."""
    name = f"transversality-{n}" if n <= 2 else f"conjecture-n{n}"
    report = CheckReport(name, status="theorem" if n <= 2 else "evidence")
    for d in _degrees(fam, degrees):
        meet = fam.RI_power(n, d).intersect(fam.S(d))
        internal = fam.I_power(n, d) if d > 0 else fam.subspace(d, [])
        defect = meet.defect(internal)
        ok = meet == internal
        report.add(DegreeResult(d, ok, {"RI^n∩S": meet.dim, "I^n": internal.dim,
                                        "RI^n": fam.RI_power(n, d).dim, "S": fam.S(d).dim},
                                None if ok else _witness(fam, defect or internal.defect(meet), d)))
    return report


def check_Q_equals_RI(fam: GradedIdealFamily, degrees: Iterable[int] | None = None) -> CheckReport:
    report = CheckReport("q-equals-ri")
    for d in _degrees(fam, degrees):
        q, ri = fam.Q(d), fam.RI(d)
        ok = q == ri
        report.add(DegreeResult(d, ok, {"Q": q.dim, "RI": ri.dim},
                                None if ok else _witness(fam, q.defect(ri) or ri.defect(q), d)))
    return report


def check_ses_dims(fam: GradedIdealFamily, degrees: Iterable[int] | None = None) -> CheckReport:
    """dim (R/RI)_d == dim (S/I)_d + dim (I/I^2)_d."""
    report = CheckReport("ses")
    for d in _degrees(fam, degrees):
        r_ri = fam.R(d).dim - fam.RI(d).dim
        s_i = fam.S(d).dim - fam.I(d).dim
        i_i2 = fam.I(d).dim - (fam.I_power(2, d).dim if d > 0 else 0)
        report.add(DegreeResult(d, r_ri == s_i + i_i2, {"R/RI": r_ri, "S/I": s_i, "I/I^2": i_i2}))
    return report


def check_preimage_lemma(fam: GradedIdealFamily, n: int,
                         degrees: Iterable[int] | None = None) -> CheckReport:
    """dd^{-1}(I^{n+1}) == S + RI^n in every degree."""
    report = CheckReport(f"preimage-{n}")
    for d in _degrees(fam, degrees):
        pre = fam.preimage_of_I_power(n + 1, d) if d > 0 else fam.R(d)
        rhs = fam.S_plus_RI(n, d)
        ok = pre == rhs
        report.add(DegreeResult(d, ok, {"preimage": pre.dim, "S+RI^n": rhs.dim},
                                None if ok else _witness(fam, pre.defect(rhs) or rhs.defect(pre), d)))
    return report


def odd_power_sum_products(d: int, power_sums: PowerSumTable) -> list[Poly]:
    """Products p_{k1} ... p_{kr} over distinct odd k's summing to d."""
    out = []
    for lam in enumerate_partitions(d):
        if all(k % 2 for k in lam) and len(set(lam)) == len(lam):
            prod = Poly.one(power_sums.max_degree)
            for k in lam:
                prod = prod * power_sums[k]
            out.append(prod)
    return out


def check_exterior_SI(fam: GradedIdealFamily, degrees: Iterable[int] | None = None,
                      power_sums: PowerSumTable | None = None) -> CheckReport:
    """dim(S/I)_d == sc(d), and square-free odd-p monomials span S_d modulo I_d."""
    power_sums = power_sums or PowerSumTable(fam.max_degree)
    report = CheckReport("exterior-si")
    for d in _degrees(fam, degrees):
        s, i = fam.S(d), fam.I(d)
        quotient = s.dim - i.dim
        sc = count_self_conjugate(d)
        pvecs = [p.to_vector(d) for p in odd_power_sum_products(d, power_sums)]
        outside = [v for v in pvecs if not s.contains(v)]
        spanned = i + fam.subspace(d, pvecs)
        ok = quotient == sc and not outside and spanned == s
        witness = None
        if outside:
            witness = _witness(fam, outside, d)
        elif spanned != s:
            witness = _witness(fam, s.defect(spanned), d)
        report.add(DegreeResult(d, ok, {"S/I": quotient, "sc": sc, "p-monomials": len(pvecs),
                                        "span(p)+I": spanned.dim, "S": s.dim}, witness))
    return report


def omega_basis_vectors(fam: GradedIdealFamily, n: int, d: int) -> list[int]:
    """m * dd(w_{2i_1}) ... dd(w_{2i_n}) for square-free m and i_1 <= ... <= i_n."""
    big_n = fam.max_degree
    out = []
    for half in range(n, d // 2 + 1):
        for lam in enumerate_partitions(half):
            if len(lam) != n:
                continue
            prod = Poly.one(big_n)
            for i in lam:
                prod = prod * fam.table.dd(Poly.gen(2 * i, big_n))
            for m in monomial_basis(d - 2 * half):
                if is_square_free(m):
                    out.append((Poly.monomial(m, big_n) * prod).to_vector(d))
    return out


def check_omega_basis(fam: GradedIdealFamily, n: int,
                      degrees: Iterable[int] | None = None) -> CheckReport:
    """The products above form a basis of (RI^n)_d / (RI^{n+1})_d."""
    report = CheckReport(f"omega-basis-{n}")
    for d in _degrees(fam, degrees):
        upper, lower = fam.RI_power(n, d), fam.RI_power(n + 1, d)
        vecs = omega_basis_vectors(fam, n, d)
        outside = [v for v in vecs if not upper.contains(v)]
        ech = Echelon(lower.rows)
        independent = all(ech.add(v) for v in vecs)
        quotient = upper.dim - lower.dim
        ok = not outside and independent and len(vecs) == quotient
        report.add(DegreeResult(d, ok, {"Omega^n": quotient, "candidates": len(vecs)},
                                _witness(fam, outside, d) if outside else None))
    return report


def check_normality(fam: GradedIdealFamily, degrees: Iterable[int] | None = None) -> CheckReport:
    """norm(w_j) in I_{2j}."""
    report = CheckReport("normality")
    big_n = fam.max_degree
    for d in _degrees(fam, degrees):
        if d == 0 or d % 2:
            continue
        j = d // 2
        v = fam.table.norm(Poly.gen(j, big_n)).to_vector(d)
        ok = fam.I(d).contains(v)
        report.add(DegreeResult(d, ok, {"I": fam.I(d).dim},
                                None if ok else fam.poly(v, d).render()))
    return report


def random_homogeneous(rng: random.Random, d: int, max_degree: int) -> Poly:
    basis = monomial_basis(d)
    while True:
        picked = [m for m in basis if rng.random() < 0.5]
        if picked:
            return Poly(picked, max_degree)


def check_norm_additive(fam: GradedIdealFamily, samples: int = 50, max_part: int = 5,
                        seed: int = 0) -> CheckReport:
    """norm(x+y) + norm(x) + norm(y) in I for random homogeneous x, y of equal degree."""
    rng = random.Random(seed)
    report = CheckReport("norm-additive")
    big_n = fam.max_degree
    for _ in range(samples):
        d = rng.randint(1, min(max_part, big_n // 2))
        x = random_homogeneous(rng, d, big_n)
        y = random_homogeneous(rng, d, big_n)
        t = fam.table
        z = t.norm(x + y) + t.norm(x) + t.norm(y)
        v = z.to_vector(2 * d)
        ok = fam.I(2 * d).contains(v) and z.degrees() <= {2 * d}
        report.add(DegreeResult(2 * d, ok, {}, None if ok else z.render()))
    return report


def check_squares_in_RI(fam: GradedIdealFamily, samples: int = 50, max_part: int = 6,
                        seed: int = 0) -> CheckReport:
    """x^2 in RI for random homogeneous x of positive degree."""
    rng = random.Random(seed)
    report = CheckReport("squares-in-ri")
    big_n = fam.max_degree
    for _ in range(samples):
        d = rng.randint(1, min(max_part, big_n // 2))
        x = random_homogeneous(rng, d, big_n)
        sq = x.square()
        ok = fam.RI(2 * d).contains(sq.to_vector(2 * d))
        report.add(DegreeResult(2 * d, ok, {}, None if ok else x.render()))
    return report


def check_dimension_oracle(fam: GradedIdealFamily, degrees: Iterable[int] | None = None) -> CheckReport:
    """dim S_d by kernel rank against (p(d) + sc(d)) / 2 by counting partitions."""
    report = CheckReport("dim-oracle")
    for d in _degrees(fam, degrees):
        p = len(enumerate_partitions(d))
        sc = count_self_conjugate(d)
        combinatorial = (p + sc) // 2
        kernel = fam.S(d).dim
        report.add(DegreeResult(d, kernel == combinatorial and (p + sc) % 2 == 0,
                                {"S": kernel, "(p+sc)/2": combinatorial}))
    return report


def check_top_form_divisibility(n: int) -> CheckReport:
    """Every nonzero x in the exterior algebra on n generators divides the top form.

    For n <= 3 every y is tried; for larger n the search stops at the first cofactor.
    """
    if not 1 <= n <= 4:
        raise ValueError("n must be in 1..4")
    report = CheckReport(f"top-form-{n}")
    size = 1 << (1 << n)
    failures = []
    for x in range(1, size):
        if n <= 3:
            ok = count_cofactors(x, n) > 0
        else:
            ok = find_cofactor(x, n) is not None
        if not ok:
            failures.append(x)
    ok = not failures
    report.add(DegreeResult(n, ok, {"nonzero elements": size - 1, "top": top_form(n).bit_length() - 1},
                            None if ok else f"x={failures[0]:#x}"))
    return report


def check_involution(fam: GradedIdealFamily, degrees: Iterable[int] | None = None) -> CheckReport:
    """omega^2 = id and dd^2 = 0 on every monomial of degree d; the defining recursion at k = d."""
    report = CheckReport("involution")
    t, big_n = fam.table, fam.max_degree
    for d in _degrees(fam, degrees):
        bad = None
        for m in monomial_basis(d):
            x = Poly.monomial(m, big_n)
            if t.omega(t.omega(x)) != x or t.dd(t.dd(x)):
                bad = x.render()
                break
        recursion = Poly.zero(big_n)
        if d > 0:
            for i in range(0, d + 1):
                w_i = Poly.one(big_n) if i == 0 else Poly.gen(i, big_n)
                recursion = recursion + w_i * t.omega_monomial(() if d == i else (d - i,))
        ok = bad is None and not recursion
        report.add(DegreeResult(d, ok, {"monomials": len(monomial_basis(d))},
                                bad or (None if ok else recursion.render())))
    return report


def check_power_sums(fam: GradedIdealFamily, power_sums: PowerSumTable | None = None,
                     degrees: Iterable[int] | None = None) -> CheckReport:
    """p_k against both parity-split sums of w_i * omega(w_{k-i}); p_k lies in S; p_k^2 = p_2k."""
    power_sums = power_sums or PowerSumTable(fam.max_degree)
    t, big_n = fam.table, fam.max_degree
    report = CheckReport("power-sums")

    def w(i: int) -> Poly:
        return Poly.one(big_n) if i == 0 else Poly.gen(i, big_n)

    def wbar(i: int) -> Poly:
        return t.omega(w(i))

    for k in _degrees(fam, degrees):
        if k == 0:
            continue
        pk = power_sums[k]
        odd = sum((w(i) * wbar(k - i) for i in range(1, k + 1, 2)), Poly.zero(big_n))
        even = sum((w(i) * wbar(k - i) for i in range(0, k + 1, 2)), Poly.zero(big_n))
        ok = pk == odd == even and not t.dd(pk)
        if 2 * k <= big_n:
            ok = ok and pk.square() == power_sums[2 * k]
        report.add(DegreeResult(k, ok, {"terms": len(pk.terms)}, None if ok else pk.render()))
    return report


def check_standard_form(fam: GradedIdealFamily, solver: StandardFormSolver | None = None,
                        degrees: Iterable[int] | None = None) -> CheckReport:
    """#terms of degree d == p(d) and evaluate(decompose(m)) == m on the monomial basis."""
    solver = solver or StandardFormSolver(fam.table)
    report = CheckReport("standard-form")
    big_n = fam.max_degree
    for d in _degrees(fam, degrees):
        count = len(standard_form_terms(d))
        p = len(enumerate_partitions(d))
        bad = None
        for m in monomial_basis(d):
            x = Poly.monomial(m, big_n)
            if solver.evaluate(solver.decompose(x)) != x:
                bad = x.render()
                break
        report.add(DegreeResult(d, count == p and bad is None, {"terms": count, "p": p}, bad))
    return report


def check_schur(max_degree: int = 10, basis: SchurBasis | None = None,
                power_sums: PowerSumTable | None = None, table: OmegaTable | None = None) -> CheckReport:
    """Per degree d: omega(s_lam) = s_conj(lam), p_d is the sum of hooks, and for odd
    d = 2j - 1, p_d = s_Gamma(j) modulo I."""
    table = table or OmegaTable(max_degree)
    basis = basis or SchurBasis(max_degree)
    power_sums = power_sums or PowerSumTable(max_degree)
    report = CheckReport("schur")
    for d in range(max_degree + 1):
        bad = None
        for lam in enumerate_partitions(d):
            if table.omega(schur_in_w(lam, max_degree)) != schur_in_w(conjugate(lam), max_degree):
                bad = f"s{lam}"
                break
        ok = bad is None
        if d > 0:
            p = basis.to_schur(power_sums[d])
            hooks = SchurExpr.of([(d - i,) + (1,) * i for i in range(d)], max_degree)
            ok = ok and p == hooks
            if d % 2:
                gamma = SchurExpr.of([gamma_hook((d + 1) // 2)], max_degree)
                ok = ok and reduce_mod_I(p) == reduce_mod_I(gamma)
        report.add(DegreeResult(d, ok, {"partitions": len(enumerate_partitions(d))},
                                bad or (None if ok else f"p{d}")))
    return report


def check_square_claim(max_j: int = 4) -> CheckReport:
    """p_{2j+1} * s_Sq(j) = s_Sq(j+1) modulo I, by Murnaghan-Nakayama alone."""
    report = CheckReport("square-claim")
    for j in range(max_j + 1):
        top = (j + 1) ** 2
        prod = mn_multiply(2 * j + 1, SchurExpr.of([square_partition(j)], top))
        target = SchurExpr.of([square_partition(j + 1)], top)
        selfconj = sorted(str(lam) for lam in prod.terms if is_self_conjugate(lam))
        ok = reduce_mod_I(prod) == target
        report.add(DegreeResult(top, ok, {"j": j, "strips": len(prod.terms)},
                                None if ok else ",".join(selfconj)))
    return report
