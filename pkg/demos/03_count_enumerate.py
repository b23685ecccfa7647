"""Counting and listing partitions, cross-checked three independent ways."""

from betapart.enumerator import (CountContext, count_descending, matched_caps, oracle_count,
                                 recurrence_check)
from betapart.quadfield import QuadPoly, evaluate

f = QuadPoly(1, -6, 6)           # beta = 3 + sqrt(3)
ctx = CountContext(f)
beta = ctx.beta
print("partitions of 6*beta:", ctx.enumerate(6 * beta))
print("p(6) =", ctx.count(6), " p(0) =", ctx.count(0), "(the empty partition)")

g = QuadPoly(1, -1, -1)          # golden ratio
digits = (2, 3, 1)
alpha = evaluate(digits, CountContext(g).beta)
caps = matched_caps(g, digits)
print("golden ratio, alpha = 2 + 3*phi + phi^2 =", alpha)
print("  digit peeling  :", CountContext(g).count(alpha))
print("  descending DFS :", count_descending(g, alpha))
print("  divisibility   :", oracle_count(g, digits, caps.max_deg, caps.coeff_cap, caps.q_cap))
print("  p(beta*a) = p(beta*a - 1) + p(a):", recurrence_check(g, alpha))
