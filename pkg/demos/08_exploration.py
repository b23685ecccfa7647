"""Exploratory tables: the values of p_beta for beta = 2 + sqrt(2), and parities."""

from betapart.enumerator import CountContext
from betapart.quadfield import QuadPoly
from betapart.verifier import congruence_table

f = QuadPoly(1, -4, 2)
ctx = CountContext(f)
seen = {}
for a in range(8):
    for b in range(8):
        seen.setdefault(ctx.count_digits((a, b)), (a, b))
print("values of p(a + b*beta), a,b < 8 (value: first a,b):", dict(sorted(seen.items())))

rows = congruence_table(QuadPoly(1, -6, 6), [(0,) * n + (6,) for n in range(6)], [2, 3])
for r in rows:
    print(r)
