"""Dimensions of the invariant ring S, the ideal I = im(dd), and S/I.

The quotient S/I turns out to be an exterior algebra on the odd power sums,
so its dimension in degree d is the number of partitions of d into distinct
odd parts, which equals the number of self-conjugate partitions of d.
"""

from __future__ import annotations

from f2sym import OmegaTable, PowerSumTable, SchurBasis
from f2sym.partitions import count_self_conjugate, enumerate_partitions
from f2sym.schur import reduce_mod_I
from f2sym.verifier import GradedIdealFamily, check_exterior_SI, check_transversality

N = 12
fam = GradedIdealFamily(OmegaTable(N))

# %% the table: dim S_d = (p(d) + sc(d)) / 2 and dim (S/I)_d = sc(d)
print(f"{'d':>3} {'p(d)':>5} {'S':>4} {'I':>4} {'S/I':>4} {'sc':>3}")
for d in range(N + 1):
    s, i = fam.S(d).dim, fam.I(d).dim
    p = len(enumerate_partitions(d))
    print(f"{d:>3} {p:>5} {s:>4} {i:>4} {s - i:>4} {count_self_conjugate(d):>3}")

# %% products of distinct odd power sums span S modulo I
print(check_exterior_SI(fam).summary())

# %% in Schur coordinates, omega conjugates the partition; modulo I only
# the self-conjugate shapes survive, e.g. p1 p3 reduces to the 2x2 square
ps = PowerSumTable(N)
basis = SchurBasis(N)
print("p1*p3 mod I =", reduce_mod_I(basis.to_schur(ps[1] * ps[3])))
print("p1*p3*p5 mod I =", reduce_mod_I(basis.to_schur(ps[1] * ps[3] * ps[5])))

# %% the extended and internal powers of I agree on S
for n in (1, 2, 3):
    print(check_transversality(n, fam, range(11 if n == 3 else N + 1)).summary())
