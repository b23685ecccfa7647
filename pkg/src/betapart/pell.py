"""Pell's equation x^2 - D y^2 = 1 and the bases built from its solutions.

For a solution ``(x, y)`` with ``x > 1`` the element ``beta = (x+1) + y*sqrt(D)``
has trace and norm both equal to ``2(x+1)``, so ``Tr <= Nm < 2 Tr - 4``
holds and ``p_beta(Tr * beta**n) = n + 1`` for every ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import isqrt
from typing import Iterator

from .errors import ConsistencyError, DomainError
from .quadfield import QuadElem, QuadPoly, is_square, is_squarefree, roots


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    D: int

    def __post_init__(self) -> None:
        if self.x * self.x - self.D * self.y * self.y != 1:
            raise ConsistencyError(f"({self.x}, {self.y}) does not solve x^2 - {self.D}y^2 = 1")

    @property
    def a(self) -> int:
        return self.x + 1

    @property
    def b(self) -> int:
        return self.y

    def compose(self, other: PellSolution) -> PellSolution:
        """Product ``(x1 + y1 sqrt D)(x2 + y2 sqrt D)``."""
        D = self.D
        return PellSolution(self.x * other.x + D * self.y * other.y,
                            self.x * other.y + self.y * other.x, D)


def _check_d(D: int) -> None:
    if D < 2 or is_square(D):
        raise DomainError(f"D must be a non-square integer >= 2, got {D}")


def fundamental_solution(D: int) -> PellSolution:
    """Least solution with ``y >= 1``, from the continued fraction of sqrt(D)."""
    _check_d(D)
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - D * k * k != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(h, k, D)


def solutions(D: int) -> Iterator[PellSolution]:
    """All positive solutions in increasing order: powers of the fundamental one."""
    fund = fundamental_solution(D)
    sol = fund
    while True:
        yield sol
        sol = sol.compose(fund)


def thm2_poly(sol: PellSolution) -> QuadPoly:
    """Monic minimal polynomial ``t^2 - 2a t + (a^2 - D b^2)`` of ``a + b sqrt D``."""
    a, b = sol.a, sol.b
    return QuadPoly(1, -2 * a, a * a - sol.D * b * b)


def corollary3_family(D: int, count: int) -> list[QuadPoly]:
    """First ``count`` bases ``beta = (x+1) + y sqrt(D)`` from Pell solutions."""
    if not is_squarefree(D) or D < 2:
        raise DomainError(f"D must be squarefree and >= 2, got {D}")
    if count < 1:
        raise DomainError("count must be >= 1")
    out = []
    for sol in solutions(D):
        if sol.x <= 1:
            continue
        f = thm2_poly(sol)
        tr, nm = -f.B, f.C
        if not tr <= nm < 2 * tr - 4:
            raise ConsistencyError(f"{f} violates Tr <= Nm < 2Tr - 4")
        beta, beta_c = roots(f)
        if beta != QuadElem(sol.a, sol.b, 1, D) or beta_c.sign() <= 0:
            raise ConsistencyError(f"{f} is not the totally positive minimal polynomial")
        out.append(f)
        if len(out) == count:
            return out
    raise AssertionError("unreachable")  # pragma: no cover


def family_rows(D: int, count: int) -> list[dict]:
    """Rows ``x, y, a, b, Tr, Nm`` for the CSV interface."""
    rows = []
    for sol, f in zip(islice((s for s in solutions(D) if s.x > 1), count),
                      corollary3_family(D, count)):
        rows.append({"x": sol.x, "y": sol.y, "a": sol.a, "b": sol.b,
                     "Tr": -f.B, "Nm": f.C})
    return rows
