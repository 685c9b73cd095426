"""A walk through the ring, its involution and the standard form.

Run with ``python3 demos/involution_tour.py``.
"""

from __future__ import annotations

from f2sym import OmegaTable, PowerSumTable, StandardFormSolver, parse
from f2sym.coordinates import MixedCoordinates

N = 12
table = OmegaTable(N)

# %% omega on the generators: w_k maps to the sum over compositions of k, mod 2
for k in range(1, 7):
    print(f"omega(w{k}) = {table.omega(parse(f'w{k}'))}")

# %% dd = 1 + omega squares to zero, and its image sits inside its kernel
x = parse("w2*w3 + w5")
print("dd(x)     =", table.dd(x))
print("dd(dd(x)) =", table.dd(table.dd(x)))

# %% the norm x * omega(x) is always fixed by omega
print("norm(w3)  =", table.norm(parse("w3")))

# %% power sums come from the Newton identity; odd ones generate the interesting part
ps = PowerSumTable(N)
for k in (1, 3, 5):
    print(f"p{k} = {ps[k]}")
print("p3^2 == p6:", ps[3].square() == ps[6])

# %% mixed coordinates swap w_odd for p_odd
mixed = MixedCoordinates(ps)
print("w3 in mixed coordinates:", mixed.to_mixed(parse("w3")))

# %% every element has a unique standard form p * a * dd(w_2i)...
solver = StandardFormSolver(table, ps)
for text in ("w1^2", "w2^2", "w1*w2*w3", "w4^2"):
    sf = solver.decompose(parse(text))
    assert solver.evaluate(sf) == parse(text)
    print(f"{text:>10} = {sf}")
