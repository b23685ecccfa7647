"""Explicit families of partitions certifying that some p_beta value is infinite.

Every generator works with polynomial identities: a family member ``Q`` of
target ``T`` satisfies ``Q - T == P * f`` for an integer polynomial ``P``,
so ``Q(beta) == T(beta)`` for both roots at once.  Members are checked
twice, by exact division and (for real roots) by evaluation in
``Q(sqrt(D))``.  Distinctness is certified by strictly increasing degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count, islice
from math import gcd, lcm
from typing import Callable, Iterator

from . import poly
from .classifier import Reason, classify, lemma_parameters
from .errors import ConsistencyError, DomainError, ResourceError
from .quadfield import QuadElem, QuadPoly, evaluate, roots

Partition = tuple

MAX_TRACE_SEARCH = 10**6


@dataclass
class WitnessFamily:
    """Lazily generated, pairwise distinct partitions of one target."""

    f: QuadPoly
    case: Reason
    target_digits: tuple
    params: dict = field(default_factory=dict)
    _gen: Callable[[], Iterator[Partition]] = field(default=None, repr=False)

    @property
    def target(self) -> QuadElem | None:
        if not self.f.is_real:
            return None
        return evaluate(self.target_digits, roots(self.f)[0])

    def __iter__(self) -> Iterator[Partition]:
        return self._gen()

    def take(self, k: int) -> list[Partition]:
        out = list(islice(self, k))
        for q in out:
            check_partition(self.f, q, self.target_digits)
        degrees = [len(q) for q in out]
        if any(a >= b for a, b in zip(degrees, degrees[1:])):
            raise ConsistencyError("family degrees are not strictly increasing")
        return out

    def to_dict(self, k: int) -> dict:
        target = self.target
        return {
            "poly": str(self.f),
            "case": self.case.value,
            "target": str(target) if target is not None else "0",
            "target_digits": list(self.target_digits),
            "params": self.params,
            "partitions": [list(q) for q in self.take(k)],
        }


def check_partition(f: QuadPoly, q: Partition, target_digits: Partition) -> None:
    """Raise :class:`ConsistencyError` unless ``q`` partitions ``target_digits(beta)``."""
    if not poly.is_nonnegative(q) or (q and q[-1] == 0):
        raise ConsistencyError(f"{q} is not a partition vector")
    if not poly.divides(f.coeffs, poly.sub(q, target_digits)):
        raise ConsistencyError(f"{f} does not divide {q} - {target_digits}")
    if f.is_real:
        beta, beta_c = roots(f)
        for b in (beta, beta_c):
            if evaluate(q, b) != evaluate(target_digits, b):
                raise ConsistencyError(f"{q} does not evaluate to the target")


# ---------------------------------------------------------------------------
# the B < 0 < C construction


def lemma_member(f: QuadPoly, n: int, i0: int, c: int) -> tuple[tuple, Partition]:
    """Multiplier ``P`` for index ``n`` and the partition ``P*f + c*x`` of ``c*beta``."""
    if n < i0:
        raise DomainError("n must be at least i0")
    a = [i0 if i <= n - i0 else n - i + 1 for i in range(n + 1)]
    b = list(poly.mul(a, (f.C, f.B, f.A)))
    if not (len(b) == n + 3 and b[n + 2] > 0):
        raise ConsistencyError("leading coefficient is not positive")
    if b[1] != -c or b[0] != f.C * i0 or b[0] <= 0:
        raise ConsistencyError(f"unexpected low coefficients {b[:2]}")
    if any(v < 0 for i, v in enumerate(b) if i != 1):
        raise ConsistencyError(f"negative coefficient in {b}")
    b[1] = 0
    return tuple(a), tuple(b)


def witness_lemma(f: QuadPoly, k: int | None = None) -> WitnessFamily:
    """Family of partitions of ``c*beta`` for ``A, C > 0 > B``, ``2A+B > 0``,
    ``A+B+C > 0``; members are indexed by ``n = i0, i0+1, ...``."""
    i0, c = lemma_parameters(f)

    def gen():
        for n in count(i0):
            yield lemma_member(f, n, i0, c)[1]

    fam = WitnessFamily(f, Reason.LEMMA, (0, c), {"i0": i0, "c": c}, gen)
    if k is not None:
        fam.take(k)
    return fam


# ---------------------------------------------------------------------------
# telescoping cases


def _telescoping(f: QuadPoly, start: Partition) -> Callable[[], Iterator[Partition]]:
    # member j is start + f*(1 + x + ... + x^(j-1)), j >= 1
    def gen():
        acc = tuple(start)
        for j in count(0):
            acc = poly.add(acc, poly.shift(f.coeffs, j))
            if not poly.is_nonnegative(acc):
                raise ConsistencyError(f"negative coefficient in {acc}")
            yield acc
    return gen


_CASE_START = {
    Reason.ZERO_PARTITION: lambda f: (),
    Reason.SHIFTED_CONSTANT: lambda f: (f.F, f.A),
    Reason.BOTH_NEGATIVE: lambda f: (f.F, f.E + f.F),
}


def witness_case(f: QuadPoly, case: Reason | str, k: int | None = None) -> WitnessFamily:
    """Unrolled identities for the three cases not covered by the lemma.

    ``Case_B≥0_C>0``: ``0 = A*b^2 + B*b + C``, repeated with shifts.
    ``Case_B≥0_C<0``: ``A*b + F = A*b^2 + (A+B)*b = A*b^3 + (A+B)*b^2 + (A+B-F)*b = ...``
    ``Case_B<0_C<0``: ``(E+F)*b + F = A*b^2 + F*b = A*b^3 + (A-E)*b^2 = ...``
    """
    case = Reason(case)
    if case is Reason.LEMMA:
        return witness_lemma(f, k)
    if case not in _CASE_START:
        raise DomainError(f"no telescoping family for {case.value}")
    cls = classify(f)
    if cls.reason is not case:
        raise DomainError(f"{f} is in case {cls.reason.value}, not {case.value}")
    start = _CASE_START[case](f)
    fam = WitnessFamily(f, case, start, {}, _telescoping(f, start))
    if k is not None:
        fam.take(k)
    return fam


# ---------------------------------------------------------------------------
# complex roots


def trace_powers(f: QuadPoly) -> Iterator[Fraction]:
    """``Tr(beta**n)`` for ``n = 0, 1, 2, ...``."""
    tr, nm = f.trace, f.norm
    u0, u1 = Fraction(2), tr
    yield u0
    while True:
        yield u1
        u0, u1 = u1, tr * u1 - nm * u0


def complex_zero_partition(f: QuadPoly) -> Partition:
    """Non-trivial partition of 0 for non-real beta.

    Takes the least ``n >= 1`` with ``Tr(beta**n) < 0``; then beta is a root
    of ``x**(2n) + q*x**n + r`` with ``q = -Tr(beta**n)`` and
    ``r = Nm(beta)**n``, both positive.  The vector is scaled to primitive
    integers and checked for divisibility by ``f``.
    """
    if f.is_real:
        raise DomainError(f"{f} has real roots")
    for n, u in enumerate(islice(trace_powers(f), 1, MAX_TRACE_SEARCH + 1), start=1):
        if u < 0:
            break
    else:
        raise ResourceError(f"no negative trace power up to n={MAX_TRACE_SEARCH}")
    q, r = -u, f.norm ** n
    vec = [Fraction(0)] * (2 * n + 1)
    vec[0], vec[n], vec[2 * n] = r, q, Fraction(1)
    scale = lcm(*(x.denominator for x in vec))
    ints = [int(x * scale) for x in vec]
    g = gcd(*ints)
    out = tuple(x // g for x in ints)
    if not poly.divides(f.coeffs, out):
        raise ConsistencyError(f"{f} does not divide {out}")
    return out


def zero_family(f: QuadPoly, zero: Partition) -> WitnessFamily:
    """Partitions of 0 of strictly increasing degree: ``zero * (1 + ... + x**(j-1))``."""
    def gen():
        acc: tuple = ()
        for j in count(0):
            acc = poly.add(acc, poly.shift(zero, j))
            yield acc
    return WitnessFamily(f, Reason.COMPLEX_ROOTS, (), {"zero": list(zero)}, gen)


def add_zero_partition(q: Partition, zero: Partition, t: int) -> list[Partition]:
    """``q, q + zero, ..., q + t*zero``: t+1 distinct partitions of the same element."""
    if not any(zero):
        raise DomainError("zero partition must be non-trivial")
    return [poly.add(q, poly.scale(zero, s)) for s in range(t + 1)]


# ---------------------------------------------------------------------------


def witness(f: QuadPoly, k: int | None = None) -> WitnessFamily:
    """Family matching the regime reported by :func:`classify`."""
    cls = classify(f)
    if cls.always_finite:
        raise DomainError(f"{f} is in the always-finite regime")
    if cls.reason is Reason.COMPLEX_ROOTS:
        fam = zero_family(f, complex_zero_partition(f))
        if k is not None:
            fam.take(k)
        return fam
    return witness_case(f, cls.reason, k)
