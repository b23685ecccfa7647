"""The m-ary partition function b_m(n) for an integer base m >= 2.

Values come from the two classical recurrences

    b_m(nm) = b_m(nm + k)             for 0 <= k < m
    b_m(nm) = b_m((n-1)m) + b_m(n)

with b_m(0) = 1 (the empty partition).  This is the independent baseline
against which the general enumerator is checked for integer bases.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from .errors import DomainError


@dataclass
class MaryTable:
    """Memo of b_m(0..computed_up_to), grown monotonically."""

    m: int
    values: list[int] = field(default_factory=lambda: [1])
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.m < 2:
            raise DomainError(f"base must be >= 2, got {self.m}")

    @property
    def computed_up_to(self) -> int:
        return len(self.values) - 1

    def extend(self, n: int) -> None:
        with self._lock:
            vals, m = self.values, self.m
            for k in range(len(vals), n + 1):
                r = k % m
                if r:
                    vals.append(vals[k - r])
                else:
                    vals.append(vals[k - m] + vals[k // m])

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise DomainError("n must be non-negative")
        if n > self.computed_up_to:
            self.extend(n)
        return self.values[n]


_tables: dict[int, MaryTable] = {}
_tables_lock = threading.Lock()


def table(m: int) -> MaryTable:
    with _tables_lock:
        t = _tables.get(m)
        if t is None:
            t = _tables[m] = MaryTable(m)
        return t


def bm(m: int, n: int) -> int:
    """Number of partitions of ``n`` into powers of ``m``."""
    if m < 2:
        raise DomainError(f"base must be >= 2, got {m}")
    return table(m)[n]


def base_digits(n: int, m: int) -> list[int]:
    """Base-m digits of n, least significant first (empty for 0)."""
    out = []
    while n:
        n, d = divmod(n, m)
        out.append(d)
    return out


def afs_congruence_check(m: int, n: int) -> tuple[int, int, bool]:
    """Check ``b_m(mn) = prod(a_i + 1) (mod m)`` over the base-m digits of n.

    Returns ``(lhs residue, rhs residue, lhs == rhs)``.
    """
    lhs = bm(m, m * n) % m
    rhs = math.prod(d + 1 for d in base_digits(n, m)) % m
    return lhs, rhs, lhs == rhs


def growth_diagnostic(m: int, n: int) -> float:
    """``log b_m(n) * 2 log m / (log n)**2``; tends to 1 (Mahler).

    Inspection only: this is the one floating-point output of the package.
    """
    if n < 2:
        raise DomainError("growth diagnostic needs n >= 2")
    return math.log(bm(m, n)) * 2 * math.log(m) / math.log(n) ** 2
