"""Exact arithmetic in real quadratic fields Q(sqrt(D)).

Elements are stored as ``(p + q*sqrt(D)) / r`` with integer ``p, q``,
``r >= 1`` and ``gcd(p, q, r) == 1``, so structural equality is value
equality.  No floating point is used anywhere: signs and floors of surds
are decided with :func:`math.isqrt`.

Integer quadratics ``A*x**2 + B*x + C`` live in :class:`QuadPoly`; their
real roots come back from :func:`roots` as a pair of :class:`QuadElem`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Sequence, Union

from sympy import factorint

from .errors import DivisionByZero, DomainError, ReducibleError

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# integer helpers


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@lru_cache(maxsize=4096)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n > 0`` as ``k*k*d`` with ``d`` squarefree; return ``(k, d)``."""
    if n <= 0:
        raise DomainError(f"expected a positive integer, got {n}")
    k, d = 1, 1
    for p, e in factorint(n).items():
        k *= p ** (e // 2)
        if e % 2:
            d *= p
    return k, d


@lru_cache(maxsize=4096)
def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return squarefree_decompose(n)[0] == 1


def floor_sqrt_times(v: int, rad: int) -> int:
    """``floor(v * sqrt(rad))`` for ``rad >= 0``."""
    s = isqrt(v * v * rad)
    if v >= 0 or s * s == v * v * rad:
        return s if v >= 0 else -s
    return -s - 1


def floor_surd(u: int, v: int, w: int, rad: int) -> int:
    """``floor((u + v*sqrt(rad)) / w)`` for ``w > 0``."""
    # floor((u + x)/w) == floor((u + floor(x))/w) for integer u and w > 0
    return (u + floor_sqrt_times(v, rad)) // w


def sign_surd(u: int, v: int, rad: int) -> int:
    """Sign of ``u + v*sqrt(rad)``."""
    if v == 0 or rad == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    if (u > 0) == (v > 0):
        return 1 if u > 0 else -1
    lhs, rhs = u * u, v * v * rad
    if lhs == rhs:
        return 0
    if lhs > rhs:
        return 1 if u > 0 else -1
    return 1 if v > 0 else -1


# ---------------------------------------------------------------------------
# field elements


@dataclass(frozen=True, eq=False)
class QuadElem:
    """The number ``(p + q*sqrt(D)) / r``, kept in canonical form."""

    p: int
    q: int
    r: int
    D: int

    def __post_init__(self) -> None:
        p, q, r, D = self.p, self.q, self.r, self.D
        if not is_squarefree(D) or D < 2:
            raise DomainError(f"D must be squarefree and >= 2, got {D}")
        if r == 0:
            raise DivisionByZero("denominator is zero")
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g != 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    # construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, x: Rational, D: int) -> QuadElem:
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator, D)

    @classmethod
    def sqrt(cls, D: int) -> QuadElem:
        return cls(0, 1, 1, D)

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.D != self.D:
                raise DomainError(f"mixed fields: D={self.D} and D={other.D}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem.from_rational(other, self.D)
        return NotImplemented

    def with_field(self, D: int) -> QuadElem:
        """Move a rational element into ``Q(sqrt(D))``."""
        if D == self.D:
            return self
        if self.q != 0:
            raise DomainError("only rational elements can change field")
        return QuadElem(self.p, 0, self.r, D)

    # predicates ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_integer(self) -> bool:
        return self.q == 0 and self.r == 1

    def rational_part(self) -> Fraction:
        return Fraction(self.p, self.r)

    def surd_part(self) -> Fraction:
        return Fraction(self.q, self.r)

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return (self.p, self.q, self.r, self.D) == (other.p, other.q, other.r, other.D)
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and Fraction(self.p, self.r) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.D))

    # arithmetic ---------------------------------------------------------

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.p, -self.q, self.r, self.D)

    def __add__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r,
                        self.r * o.r, self.D)

    __radd__ = __add__

    def __sub__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        D = self.D
        return QuadElem(self.p * o.p + self.q * o.q * D, self.p * o.q + self.q * o.p,
                        self.r * o.r, D)

    __rmul__ = __mul__

    def inverse(self) -> QuadElem:
        n = self.p * self.p - self.q * self.q * self.D
        if n == 0:
            raise DivisionByZero("inverse of zero")
        return QuadElem(self.r * self.p, -self.r * self.q, n, self.D)

    def __truediv__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int) -> QuadElem:
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem(1, 0, 1, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # order --------------------------------------------------------------

    def sign(self) -> int:
        return sign_surd(self.p, self.q, self.D)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QuadElem with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __floor__(self) -> int:
        return floor_surd(self.p, self.q, self.r, self.D)

    # conjugation --------------------------------------------------------

    def conjugate(self) -> QuadElem:
        return QuadElem(self.p, -self.q, self.r, self.D)

    def trace(self) -> Fraction:
        return Fraction(2 * self.p, self.r)

    def norm(self) -> Fraction:
        return Fraction(self.p * self.p - self.q * self.q * self.D, self.r * self.r)

    # text ---------------------------------------------------------------

    def __str__(self) -> str:
        return f"({self.p}{self.q:+d}*sqrt({self.D}))/{self.r}"

    def __float__(self) -> float:
        # display only; never used on a correctness path
        return (self.p + self.q * self.D ** 0.5) / self.r


def normalize(p: int, q: int, r: int, D: int) -> QuadElem:
    return QuadElem(p, q, r, D)


def sign(x: QuadElem) -> int:
    return x.sign()


def conjugate(x: QuadElem) -> QuadElem:
    return x.conjugate()


def trace_norm(x: QuadElem) -> tuple[Fraction, Fraction]:
    return x.trace(), x.norm()


def floor_div(x: QuadElem | Rational, y: QuadElem | Rational) -> int:
    """Exact ``floor(x / y)`` for ``y > 0``."""
    if not isinstance(x, QuadElem) and not isinstance(y, QuadElem):
        y = Fraction(y)
        if y <= 0:
            raise DomainError("floor_div needs a positive divisor")
        return Fraction(x) // y
    if not isinstance(x, QuadElem):
        x = QuadElem.from_rational(x, y.D)
    if not isinstance(y, QuadElem):
        y = QuadElem.from_rational(y, x.D)
    if y.sign() <= 0:
        raise DomainError("floor_div needs a positive divisor")
    k = (x / y).__floor__()
    # boundary check: k*y <= x < (k+1)*y
    if (x - k * y).sign() < 0 or (x - (k + 1) * y).sign() >= 0:
        raise AssertionError(f"floor_div boundary check failed for {x} / {y}")
    return k


_NUM = r"[+-]?\d+"
_ELEM_RE = re.compile(
    rf"^\(\s*({_NUM})\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*(?:/\s*({_NUM}))?$"
)
_RAT_RE = re.compile(rf"^({_NUM})\s*(?:/\s*({_NUM}))?$")


def parse_elem(text: str, D: int | None = None) -> QuadElem | Fraction:
    """Parse ``"(p+q*sqrt(D))/r"``; plain ``"p"`` or ``"p/r"`` gives a rational.

    A rational is lifted into ``Q(sqrt(D))`` when ``D`` is supplied.
    """
    text = text.strip()
    m = _ELEM_RE.match(text)
    if m:
        p, op, q, d, r = m.groups()
        q = int(q) if op == "+" else -int(q)
        elem = QuadElem(int(p), q, int(r) if r else 1, int(d))
        if D is not None and elem.D != D:
            return elem.with_field(D)
        return elem
    m = _RAT_RE.match(text)
    if m:
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise DivisionByZero("denominator is zero")
        x = Fraction(int(num), int(den) if den else 1)
        return QuadElem.from_rational(x, D) if D is not None else x
    raise DomainError(f"cannot parse field element {text!r}")


def evaluate(coeffs: Sequence[int], x: QuadElem) -> QuadElem:
    """Exact ``sum(coeffs[i] * x**i)`` by Horner's rule on raw integers."""
    D, p, q, r = x.D, x.p, x.q, x.r
    X, Y, den = 0, 0, 1  # running value is (X + Y*sqrt(D)) / den
    for c in reversed(coeffs):
        if X == 0 and Y == 0:
            X, den = c, 1
            continue
        X, Y = X * p + Y * q * D, X * q + Y * p
        den *= r
        X += c * den
    return QuadElem(X, Y, den, D)


# ---------------------------------------------------------------------------
# integer quadratics


@dataclass(frozen=True)
class QuadPoly:
    """Primitive irreducible ``A*x**2 + B*x + C`` with ``A > 0``."""

    A: int
    B: int
    C: int

    def __post_init__(self) -> None:
        if self.A <= 0:
            raise DomainError("leading coefficient must be positive")
        if gcd(gcd(self.A, self.B), self.C) != 1:
            raise DomainError(f"{self} is not primitive")
        d = self.disc
        if d == 0 or is_square(d):
            raise ReducibleError(f"{self} is reducible (discriminant {d})")

    @classmethod
    def parse(cls, text: str) -> QuadPoly:
        try:
            a, b, c = (int(t) for t in text.split(","))
        except ValueError:
            raise DomainError(f"expected 'A,B,C', got {text!r}") from None
        return cls(a, b, c)

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    @property
    def E(self) -> int:
        return -self.B

    @property
    def F(self) -> int:
        return -self.C

    @property
    def is_monic(self) -> bool:
        return self.A == 1

    @property
    def is_real(self) -> bool:
        return self.disc > 0

    @property
    def trace(self) -> Fraction:
        return Fraction(-self.B, self.A)

    @property
    def norm(self) -> Fraction:
        return Fraction(self.C, self.A)

    @property
    def coeffs(self) -> tuple[int, int, int]:
        """Coefficients low degree first, matching :class:`Partition` vectors."""
        return (self.C, self.B, self.A)

    def __str__(self) -> str:
        return f"{self.A},{self.B},{self.C}"


def roots(f: QuadPoly) -> tuple[QuadElem, QuadElem] | tuple[Fraction, Fraction]:
    """``(beta, beta')`` with ``beta > beta'`` for real roots.

    For a negative discriminant only ``(trace, norm)`` is returned.
    """
    d = f.disc
    if d < 0:
        return f.trace, f.norm
    k, D = squarefree_decompose(d)
    two_a = 2 * f.A
    return QuadElem(-f.B, k, two_a, D), QuadElem(-f.B, -k, two_a, D)
