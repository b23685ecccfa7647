"""Exact arithmetic in Q(sqrt(D)): canonical forms, signs, floors, conjugates."""

from betapart.quadfield import QuadElem, QuadPoly, floor_div, normalize, roots, trace_norm

x = normalize(2, 4, 6, 5)
print("normalize(2, 4, 6, 5) =", x)                      # (1+2*sqrt(5))/3

# 3 - 2*sqrt(2) is tiny but positive; the sign is decided with integers only
tiny = QuadElem(3, -2, 1, 2)
print("sign(3 - 2*sqrt(2)) =", tiny.sign())

# floors are exact: 10/sqrt(2) = 7.07...
print("floor(10 / sqrt 2) =", floor_div(10, QuadElem.sqrt(2)))

beta, beta_c = roots(QuadPoly(1, -6, 6))
print("roots of x^2-6x+6:", beta, beta_c)
print("trace, norm of beta:", *map(str, trace_norm(beta)))
print("beta * beta' == 6:", beta * beta_c == 6)
