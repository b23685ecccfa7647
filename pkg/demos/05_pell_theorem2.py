"""Bases from Pell's equation realise every value: p((Tr beta) beta^n) = n + 1."""

from betapart.enumerator import CountContext
from betapart.pell import corollary3_family, fundamental_solution

for D in (2, 3, 5, 6, 7):
    sol = fundamental_solution(D)
    print(f"D={D}: fundamental solution {sol.x}^2 - {D}*{sol.y}^2 = 1")
    for f in corollary3_family(D, 2):
        ctx = CountContext(f)
        counts = [ctx.count_digits((0,) * n + (f.E,)) for n in range(6)]
        print(f"    t^2 - {f.E} t + {f.C}: counts {counts}")
