"""Generators and relations for S.

S is generated by the odd power sums p_k and symbols D[a], one for each
square-free monomial a in the even w's, with D[a] evaluating to dd(a).
Two families of relations suffice: one expressing p_k^2 through D's, and a
quadratic identity among D's for every triple of even monomials.
"""

from __future__ import annotations

from f2sym import Presentation

# %% relations up to degree 12
pres = Presentation(12)
for r in pres.relations:
    if r.poly:
        print(f"[{r.kind:>6}] deg {r.degree:>2}: {r.poly}")
zero = [r.label for r in pres.relations if not r.poly]
print(f"{len(zero)} of the triple relations vanish identically in the free algebra")

# %% every relation is zero after substituting D[a] -> dd(a), p_k -> p_k
assert all(pres.evaluate(r.poly).is_zero() for r in pres.relations)

# %% the quotient has the right size in each degree
report = pres.verify()
for res in report.results:
    print(f"d={res.degree:>2}  free={res.dims['F']:>3}  quotient={res.dims['Stilde']:>3}  S={res.dims['S']:>3}")
print(report.summary())

# %% the triple relations first matter in degree 12
p_only = [r for r in pres.relations if r.kind == "p2"]
print("degree 12 with only the p^2 relations:", pres.stilde_graded_dim(12, p_only),
      "vs dim S_12 =", pres.stilde_graded_dim(12))
