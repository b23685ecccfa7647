"""Dense integer polynomials as coefficient tuples, lowest degree first.

``(c0, c1, ..., cn)`` stands for ``c0 + c1*x + ... + cn*x**n``; the zero
polynomial is ``()``.  A partition into powers of beta is exactly such a
tuple with non-negative entries.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Sequence

Poly = tuple  # tuple[int, ...]; Fractions only inside divmod_exact


def trim(c: Sequence) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(c: Sequence) -> int:
    """Degree of ``c``; ``-1`` for the zero polynomial."""
    return len(trim(c)) - 1


def add(a: Sequence, b: Sequence) -> tuple:
    return trim(x + y for x, y in zip_longest(a, b, fillvalue=0))


def sub(a: Sequence, b: Sequence) -> tuple:
    return trim(x - y for x, y in zip_longest(a, b, fillvalue=0))


def scale(a: Sequence, k) -> tuple:
    return trim(k * x for x in a)


def shift(a: Sequence, n: int) -> tuple:
    """Multiply by ``x**n``."""
    a = trim(a)
    return (0,) * n + a if a else ()


def mul(a: Sequence, b: Sequence) -> tuple:
    a, b = trim(a), trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_exact(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    """Quotient and remainder of ``a / b`` over the rationals."""
    a, b = [Fraction(x) for x in trim(a)], trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return _normal(q), _normal(a[: len(b) - 1])


def _normal(c: Sequence[Fraction]) -> tuple:
    return trim(int(x) if x.denominator == 1 else x for x in c)


def divides(b: Sequence, a: Sequence) -> bool:
    return divmod_exact(a, b)[1] == ()


def is_nonnegative(a: Sequence) -> bool:
    return all(x >= 0 for x in a)


def to_str(a: Sequence, var: str = "b") -> str:
    """Human-readable ``3*b^2 + b + 6`` (highest power first)."""
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"
