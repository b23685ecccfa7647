"""Counting and listing partitions of alpha into non-negative powers of beta.

A partition is a tuple ``(a0, a1, ..., aj)`` of non-negative integers with
``sum(a_i * beta**i) == alpha`` and a non-zero last entry; ``()`` is the
zero polynomial, so ``p_beta(0) == 1`` whenever the count is finite.

Three independent routes are provided:

* :func:`count` / :func:`enumerate_partitions` peel the constant digit:
  ``p(alpha) = sum over a0 of p((alpha - a0) / beta)``.  Elements are held
  in rational coordinates ``s + t*beta``, which makes both real embeddings
  available at once.  The embedding at the root ``> 1`` bounds ``a0`` and
  guarantees termination; a positive second root bounds ``a0`` again, and
  integrality of ``(alpha - a0)/beta`` fixes ``a0`` modulo the part of
  ``C`` coprime to ``A``.
* :func:`count_descending` is the textbook descending-power search on the
  embedding ``> 1``, ``a_i`` ranging over ``0..floor(rem / beta**i)``.
* :func:`oracle_count` never evaluates anything at beta: it counts integer
  polynomials ``P`` with ``P*f + R >= 0`` coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import poly
from .errors import DomainError, RegimeError, ResourceError
from .quadfield import (
    QuadElem,
    QuadPoly,
    evaluate,
    floor_surd,
    roots,
    sign_surd,
)

Partition = tuple  # tuple[int, ...], lowest degree first

DEFAULT_MAX_NODES = 10**7


# ---------------------------------------------------------------------------
# coordinates


def _strip_primes_of(n: int, a: int) -> int:
    """``n`` with every prime factor of ``a`` removed."""
    g = gcd(n, a)
    while g > 1:
        while n % g == 0:
            n //= g
        g = gcd(n, a)
    return n


def base_root(f: QuadPoly, conjugate_root: bool = False) -> QuadElem:
    """The larger real root of ``f``, or the smaller one if requested."""
    if not f.is_real:
        raise RegimeError(f"{f} has no real roots")
    beta, beta_c = roots(f)
    return beta_c if conjugate_root else beta


def coordinates(f: QuadPoly, alpha, conjugate_root: bool = False) -> tuple[Fraction, Fraction]:
    """Rationals ``(s, t)`` with ``alpha == s + t*beta``."""
    beta = base_root(f, conjugate_root)
    if isinstance(alpha, (int, Fraction)):
        return Fraction(alpha), Fraction(0)
    if alpha.D != beta.D:
        if not alpha.is_rational:
            raise DomainError(f"alpha lies in Q(sqrt({alpha.D})), beta in Q(sqrt({beta.D}))")
        return alpha.rational_part(), Fraction(0)
    t = Fraction(alpha.q * beta.r, alpha.r * beta.q)
    s = Fraction(alpha.p, alpha.r) - t * Fraction(beta.p, beta.r)
    return s, t


def digit_coordinates(f: QuadPoly, digits: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Coordinates of ``sum(digits[i] * beta**i)``, via reduction modulo ``f``."""
    _, rem = poly.divmod_exact(digits, f.coeffs)
    rem = tuple(Fraction(x) for x in rem) + (Fraction(0),) * 2
    return rem[0], rem[1]


# ---------------------------------------------------------------------------
# digit-peeling backends


class _QuadraticBackend:
    """State ``(S, T, den)`` encodes ``(S + T*beta) / den`` in lowest terms."""

    def __init__(self, f: QuadPoly):
        if not f.is_real:
            raise RegimeError(f"{f} has complex roots; p_beta is 0 or infinite")
        self.f = f
        A, B, C, disc = f.A, f.B, f.C, f.disc
        self.disc = disc
        # root(sigma) = (-B + sigma*sqrt(disc)) / (2A)
        above_one = [s for s in (1, -1) if sign_surd(-B - 2 * A, s, disc) > 0]
        if not above_one:
            raise RegimeError(f"no root of {f} exceeds 1; some element has infinitely many partitions")
        self.hat = above_one[0]
        self.positive = [s for s in (1, -1) if sign_surd(-B, s, disc) > 0]
        self.c_free = _strip_primes_of(abs(C), A)

    def state(self, s: Fraction, t: Fraction) -> tuple[int, int, int]:
        den = s.denominator * t.denominator // gcd(s.denominator, t.denominator)
        return self._reduce(s.numerator * (den // s.denominator),
                            t.numerator * (den // t.denominator), den)

    @staticmethod
    def _reduce(S: int, T: int, den: int) -> tuple[int, int, int]:
        if den < 0:
            S, T, den = -S, -T, -den
        g = gcd(gcd(S, T), den)
        return (S // g, T // g, den // g) if g > 1 else (S, T, den)

    def is_zero(self, x) -> bool:
        return x[0] == 0 and x[1] == 0

    def _floor_at(self, x, sigma: int) -> int:
        S, T, den = x
        A, B = self.f.A, self.f.B
        return floor_surd(2 * A * S - B * T, sigma * T, 2 * A * den, self.disc)

    def digits(self, x) -> Iterable[int]:
        S, T, den = x
        if _strip_primes_of(den, self.f.A) != 1:
            return ()
        hi = self._floor_at(x, self.hat)
        if hi < 1:
            # a non-zero partition has value >= 1 at the root above one
            return ()
        for sigma in self.positive:
            if sigma != self.hat:
                hi = min(hi, self._floor_at(x, sigma))
        lo = 0
        B = self.f.B
        if B <= 0:
            # Here |other root| <= beta_hat, so every element c with a
            # partition has |c'| <= c_hat.  For c = (x - a0)/beta this pins
            # a0 between s and s - 2Ct/B, where x = s + t*beta.
            s_floor = S // den
            if B == 0:
                hi = min(hi, s_floor)
            else:
                num, dd = S * B - 2 * self.f.C * T, B * den
                if dd < 0:
                    num, dd = -num, -dd
                if self.f.C < 0:
                    lo, hi = max(lo, -(-num // dd)), min(hi, s_floor)
                else:
                    lo, hi = max(lo, -(-S // den)), min(hi, num // dd)
        if hi < lo:
            return ()
        m = self.c_free
        if m == 1:
            return range(lo, hi + 1)
        start = lo + (S * pow(den, -1, m) - lo) % m
        return range(start, hi + 1, m)

    def shift(self, x, a0: int):
        # (s - a0 + t*beta) / beta, using 1/beta = -(A*beta + B)/C
        S, T, den = x
        A, B, C = self.f.A, self.f.B, self.f.C
        S1 = S - a0 * den
        return self._reduce(T * C - S1 * B, -S1 * A, den * C)


class _IntegerBackend:
    """Base ``m`` acting on non-negative integers."""

    def __init__(self, m: int):
        if m < 2:
            raise DomainError(f"integer base must be >= 2, got {m}")
        self.m = m

    def is_zero(self, n: int) -> bool:
        return n == 0

    def digits(self, n: int) -> Iterable[int]:
        if n < 0:
            return ()
        return range(n % self.m, n + 1, self.m)

    def shift(self, n: int, a0: int) -> int:
        return (n - a0) // self.m


def _peel(backend, root, max_nodes: int, memo: dict, collect: bool):
    """Memoised iterative post-order over the peeling tree."""
    nodes = 0
    pending: dict = {}
    stack = [root]
    while stack:
        x = stack[-1]
        if x in memo:
            stack.pop()
            continue
        kids = pending.get(x)
        if kids is None:
            nodes += 1
            if nodes > max_nodes:
                raise ResourceError(f"search exceeded {max_nodes} nodes")
            if backend.is_zero(x):
                memo[x] = [()] if collect else 1
                stack.pop()
                continue
            choices = backend.digits(x)
            nodes += len(choices)
            if nodes > max_nodes:
                raise ResourceError(f"search exceeded {max_nodes} nodes")
            kids = pending[x] = [(a, backend.shift(x, a)) for a in choices]
        missing = [k for _, k in kids if k not in memo]
        if missing:
            stack.extend(missing)
            continue
        if collect:
            memo[x] = [(a,) + tail for a, k in kids for tail in memo[k]]
        else:
            memo[x] = sum(memo[k] for _, k in kids)
        del pending[x]
        stack.pop()
    return memo[root]


@dataclass
class CountContext:
    """Reusable counting state for one base; share it to share the memo.

    The memo is insert-only and every insert is idempotent, so a context
    may be used from several threads.
    """

    f: QuadPoly
    conjugate_root: bool = False
    max_nodes: int = DEFAULT_MAX_NODES
    memo: dict = field(default_factory=dict, repr=False)
    lists: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._backend = _QuadraticBackend(self.f)

    @property
    def beta(self) -> QuadElem:
        return base_root(self.f, self.conjugate_root)

    @property
    def beta_hat(self) -> QuadElem:
        beta = self.beta
        return beta if beta > 1 else beta.conjugate()

    @property
    def use_conjugate(self) -> bool:
        return not self.beta > 1

    def _state(self, alpha):
        s, t = coordinates(self.f, alpha, self.conjugate_root)
        return self._backend.state(s, t)

    def count(self, alpha) -> int:
        return _peel(self._backend, self._state(alpha), self.max_nodes, self.memo, False)

    def count_digits(self, digits: Sequence[int]) -> int:
        st = self._backend.state(*digit_coordinates(self.f, digits))
        return _peel(self._backend, st, self.max_nodes, self.memo, False)

    def enumerate(self, alpha) -> list[Partition]:
        found = _peel(self._backend, self._state(alpha), self.max_nodes, self.lists, True)
        return sort_partitions(found)

    def enumerate_digits(self, digits: Sequence[int]) -> list[Partition]:
        st = self._backend.state(*digit_coordinates(self.f, digits))
        return sort_partitions(_peel(self._backend, st, self.max_nodes, self.lists, True))


def sort_partitions(parts: Iterable[Partition]) -> list[Partition]:
    """Low degree first, then lexicographic from the constant term."""
    return sorted(parts, key=lambda c: (len(c), c))


def count(f: QuadPoly, alpha, conjugate_root: bool = False,
          max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """``p_beta(alpha)`` where beta is the larger root of ``f``.

    With ``conjugate_root`` beta is the smaller root instead.  Raises
    :class:`RegimeError` unless some root of ``f`` exceeds 1.
    """
    return CountContext(f, conjugate_root, max_nodes).count(alpha)


def enumerate_partitions(f: QuadPoly, alpha, conjugate_root: bool = False,
                         max_nodes: int = DEFAULT_MAX_NODES) -> list[Partition]:
    return CountContext(f, conjugate_root, max_nodes).enumerate(alpha)


def count_integer_base(m: int, n: int, max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """Partitions of ``n`` into powers of the integer ``m`` by digit peeling."""
    return _peel(_IntegerBackend(m), n, max_nodes, {}, False)


def enumerate_integer_base(m: int, n: int, max_nodes: int = DEFAULT_MAX_NODES) -> list[Partition]:
    return sort_partitions(_peel(_IntegerBackend(m), n, max_nodes, {}, True))


# ---------------------------------------------------------------------------
# descending-power search


def _descend(alpha_hat, beta_hat, top: int, floordiv, accept, prune, max_nodes: int) -> int:
    powers = [beta_hat ** 0]
    for _ in range(top):
        powers.append(powers[-1] * beta_hat)
    memo: dict = {}
    nodes = 0

    def rec(rem, i):
        nonlocal nodes
        key = (rem, i)
        if key in memo:
            return memo[key]
        nodes += 1
        if nodes > max_nodes:
            raise ResourceError(f"search exceeded {max_nodes} nodes")
        if i == 0:
            res = 1 if accept(rem) else 0
        else:
            res = 0
            pw = powers[i]
            for a in range(floordiv(rem, pw) + 1):
                nxt = rem - a * pw
                if prune(nxt):
                    continue
                res += rec(nxt, i - 1)
        memo[key] = res
        return res

    return rec(alpha_hat, top)


def count_descending(f: QuadPoly, alpha, conjugate_root: bool = False,
                     max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """Same value as :func:`count`, by descending-power search."""
    ctx = CountContext(f, conjugate_root, max_nodes)
    beta = ctx.beta
    if isinstance(alpha, (int, Fraction)):
        alpha = QuadElem.from_rational(alpha, beta.D)
    elif alpha.D != beta.D:
        alpha = alpha.with_field(beta.D)
    if beta > 1:
        beta_hat, alpha_hat = beta, alpha
    else:
        beta_hat, alpha_hat = beta.conjugate(), alpha.conjugate()
    if alpha_hat.sign() < 0:
        return 0
    if not alpha_hat:
        return 1
    top = 0
    pw = beta_hat
    while pw <= alpha_hat:
        top += 1
        pw = pw * beta_hat
    other_positive = beta_hat.conjugate().sign() > 0

    def floordiv(x, y):
        return (x / y).__floor__()

    def accept(x):
        return x.is_integer and x.p >= 0

    def prune(x):
        if x.sign() < 0:
            return True
        return other_positive and x.conjugate().sign() < 0

    return _descend(alpha_hat, beta_hat, top, floordiv, accept, prune, max_nodes)


def count_integer_base_descending(m: int, n: int, max_nodes: int = DEFAULT_MAX_NODES) -> int:
    if m < 2:
        raise DomainError(f"integer base must be >= 2, got {m}")
    if n < 0:
        return 0
    if n == 0:
        return 1
    top = 0
    while m ** (top + 1) <= n:
        top += 1
    return _descend(n, m, top, lambda x, y: x // y, lambda x: x >= 0,
                    lambda x: x < 0, max_nodes)


# ---------------------------------------------------------------------------
# polynomial-divisibility oracle


def _bottom_up(c0: int, c1: int, c2: int, R: Sequence[int], lo: int, hi: int,
               coeff_cap: int, q_cap: int | None, max_nodes: int, collect: bool):
    """Integer vectors ``p`` (nonzero only on ``lo..hi``) with every
    coefficient of ``R + (c0 + c1*x + c2*x**2) * p`` in ``[0, q_cap]``.
    """
    N = len(R) - 1
    p = [0] * (N + 1)
    found = []
    total = 0
    nodes = 0

    def q_at(i):
        v = R[i] + c0 * p[i]
        if i >= 1:
            v += c1 * p[i - 1]
        if i >= 2:
            v += c2 * p[i - 2]
        return v

    def ok(v):
        return v >= 0 and (q_cap is None or v <= q_cap)

    def rec(i):
        nonlocal total, nodes
        nodes += 1
        if nodes > max_nodes:
            raise ResourceError(f"oracle exceeded {max_nodes} nodes")
        if i > N:
            total += 1
            if collect:
                found.append(tuple(p))
            return
        if i < lo or i > hi:
            p[i] = 0
            if ok(q_at(i)):
                rec(i + 1)
            return
        base = q_at(i) - c0 * p[i]  # contribution without p[i]
        # need 0 <= base + c0*p[i] <= q_cap
        if c0 > 0:
            low = -(base // c0)  # ceil(-base / c0)
            up = None if q_cap is None else (q_cap - base) // c0
        else:
            up = base // (-c0)
            low = None if q_cap is None else -((q_cap - base) // (-c0))
        low = -coeff_cap if low is None else max(low, -coeff_cap)
        up = coeff_cap if up is None else min(up, coeff_cap)
        for v in range(low, up + 1):
            p[i] = v
            rec(i + 1)
        p[i] = 0

    rec(0)
    return found if collect else total


def _oracle(f: QuadPoly, R: Sequence[int], max_deg: int, coeff_cap: int,
            q_cap: int | None, max_nodes: int, collect: bool):
    R = list(poly.trim(R))
    N = max(max_deg + 2, len(R) - 1)
    R = R + [0] * (N + 1 - len(R))
    A, B, C = f.A, f.B, f.C
    if A > abs(C):
        # sweep from the top: reverse every polynomial so that A leads
        rev = _bottom_up(A, B, C, R[::-1], N - 2 - max_deg, N - 2, coeff_cap, q_cap,
                         max_nodes, collect)
        if not collect:
            return rev
        # original P_k sits at reversed index N-2-k
        return [tuple(v[::-1])[2: max_deg + 3] for v in rev]
    return _bottom_up(C, B, A, R, 0, max_deg, coeff_cap, q_cap, max_nodes, collect)


def oracle_count(f: QuadPoly, alpha_digits: Sequence[int], max_deg: int, coeff_cap: int,
                 q_cap: int | None = None, max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """Count ``P`` with ``deg P <= max_deg``, ``|P_i| <= coeff_cap`` and
    ``P*f + R`` non-negative (and ``<= q_cap`` if given) coefficientwise.

    Each such ``P`` is one partition ``Q = R + P*f`` of ``R(beta)``.
    """
    if max_deg < 0:
        raise DomainError("max_deg must be >= 0")
    if any(a < 0 for a in alpha_digits):
        raise DomainError("reference digits must be non-negative")
    return _oracle(f, alpha_digits, max_deg, coeff_cap, q_cap, max_nodes, False)


def oracle_partitions(f: QuadPoly, alpha_digits: Sequence[int], max_deg: int, coeff_cap: int,
                      q_cap: int | None = None, max_nodes: int = DEFAULT_MAX_NODES) -> list[Partition]:
    """The partitions ``R + P*f`` behind :func:`oracle_count`.

    Also serves as the bounded search in regimes where counts can be infinite.
    """
    if any(a < 0 for a in alpha_digits):
        raise DomainError("reference digits must be non-negative")
    ps = _oracle(f, alpha_digits, max_deg, coeff_cap, q_cap, max_nodes, True)
    return sort_partitions(poly.add(alpha_digits, poly.mul(P, f.coeffs)) for P in ps)


@dataclass(frozen=True)
class OracleCaps:
    max_deg: int
    coeff_cap: int
    q_cap: int


def matched_caps(f: QuadPoly, alpha_digits: Sequence[int]) -> OracleCaps:
    """Caps large enough for :func:`oracle_count` to see every partition.

    With ``beta_hat > 1`` the root used for the search and ``alpha_hat`` the
    matching image of alpha: every partition has degree at most
    ``J = max{j : beta_hat**j <= alpha_hat}`` and coefficients at most
    ``floor(alpha_hat)``.  The bound on ``P`` comes from expanding ``1/f``
    at infinity.
    """
    ctx = CountContext(f)
    beta_hat = ctx.beta_hat
    alpha_hat = evaluate(alpha_digits, beta_hat)
    U = alpha_hat.__floor__()
    J = 0
    pw = beta_hat
    while pw <= alpha_hat:
        J += 1
        pw = pw * beta_hat
    N = max(J, poly.degree(alpha_digits))
    max_deg = max(N - 2, 0)
    beta, beta_c = roots(f)
    M = max(abs(beta.__floor__()), abs(beta_c.__floor__())) + 1
    top = max(U, max(alpha_digits, default=0))
    bound = sum((j + 1) * M ** j for j in range(max(N - 1, 1)))
    return OracleCaps(max_deg, -(-top * bound // f.A), max(U, 0))


# ---------------------------------------------------------------------------
# recurrence


def recurrence_check(f: QuadPoly, alpha, conjugate_root: bool = False,
                     max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    """``p(beta*alpha) == p(beta*alpha - 1) + p(alpha)``, each count independent."""
    beta = base_root(f, conjugate_root)
    if isinstance(alpha, (int, Fraction)):
        alpha = QuadElem.from_rational(alpha, beta.D)
    lhs = count(f, beta * alpha, conjugate_root, max_nodes)
    rhs = (count(f, beta * alpha - 1, conjugate_root, max_nodes)
           + count(f, alpha, conjugate_root, max_nodes))
    return lhs == rhs
