"""Finiteness regime of p_beta for beta a root of ``A*x**2 + B*x + C``.

The regime is computed twice, from the coefficient test

    2A + B <= 0,  or  2A + B > 0 and A + B + C < 0

and from an exact comparison of the larger root with 1.  Disagreement
means an arithmetic bug and raises :class:`ConsistencyError`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import ConsistencyError, DomainError
from .quadfield import QuadElem, QuadPoly, evaluate, roots


class Verdict(str, enum.Enum):
    ALWAYS_FINITE = "AlwaysFinite"
    INFINITE_CAPABLE = "InfiniteCapable"


class Reason(str, enum.Enum):
    CONJUGATE_ABOVE_ONE = "ConjugateAboveOne"
    ZERO_PARTITION = "Case_B≥0_C>0"
    SHIFTED_CONSTANT = "Case_B≥0_C<0"
    LEMMA = "Case_B<0_C>0_Lemma"
    BOTH_NEGATIVE = "Case_B<0_C<0"
    COMPLEX_ROOTS = "ComplexRoots"


class SpecialValue(str, enum.Enum):
    ZERO = "Zero"
    ONE = "One"
    INFINITY = "Infinity"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Classification:
    f: QuadPoly
    verdict: Verdict
    reason: Reason
    witness_target: QuadElem | None = None
    # digit vector of the target; () is zero
    target_digits: tuple | None = None

    @property
    def always_finite(self) -> bool:
        return self.verdict is Verdict.ALWAYS_FINITE

    def to_dict(self) -> dict:
        if self.witness_target is not None:
            target = str(self.witness_target)
        elif self.target_digits == ():
            target = "0"
        else:
            target = None
        return {"verdict": self.verdict.value, "reason": self.reason.value,
                "witness_target": target}


def coefficient_test(f: QuadPoly) -> bool:
    """Finite-regime condition read off the coefficients."""
    A, B, C = f.A, f.B, f.C
    return 2 * A + B <= 0 or (2 * A + B > 0 and A + B + C < 0)


def root_test(f: QuadPoly) -> bool:
    """Some real root exceeds 1 (exact)."""
    beta, beta_c = roots(f)
    return (beta - 1).sign() > 0 or (beta_c - 1).sign() > 0


def lemma_parameters(f: QuadPoly) -> tuple[int, int]:
    """``(i0, c)`` for the ``B < 0 < C`` construction: the least ``i0 >= 2``
    with ``A*i0 >= E*i0 - C*(i0 - 1)`` and ``c = (E - C)*i0``."""
    A, E, C = f.A, f.E, f.C
    if not (C > 0 and E > 0 and 2 * A > E and A - E + C > 0 and f.is_real):
        raise DomainError(f"{f} does not satisfy A>0, C>0, B<0, 2A+B>0, A+B+C>0")
    # A*i0 >= E*i0 - C*i0 + C  <=>  i0*(A - E + C) >= C
    k = A - E + C
    i0 = max(2, -(-C // k))
    return i0, (E - C) * i0


def classify(f: QuadPoly) -> Classification:
    A, B, C = f.A, f.B, f.C
    if not f.is_real:
        # A*C > 0 here, so C > 0; with B >= 0 the polynomial itself is a
        # zero partition, otherwise some power of beta has negative trace
        reason = Reason.ZERO_PARTITION if B >= 0 else Reason.COMPLEX_ROOTS
        return Classification(f, Verdict.INFINITE_CAPABLE, reason, None, ())

    by_coeffs = coefficient_test(f)
    by_roots = root_test(f)
    if by_coeffs != by_roots:
        raise ConsistencyError(f"coefficient and root tests disagree for {f}")
    if by_coeffs:
        return Classification(f, Verdict.ALWAYS_FINITE, Reason.CONJUGATE_ABOVE_ONE)

    if A + B + C == 0:  # pragma: no cover - rejected by QuadPoly
        raise ConsistencyError(f"{f} has root 1 and cannot be irreducible")
    beta = roots(f)[0]
    E, F = -B, -C
    if B >= 0 and C > 0:
        reason, digits = Reason.ZERO_PARTITION, ()
    elif B >= 0:
        reason, digits = Reason.SHIFTED_CONSTANT, (F, A)
    elif C > 0:
        reason = Reason.LEMMA
        digits = (0, lemma_parameters(f)[1])
    else:
        reason, digits = Reason.BOTH_NEGATIVE, (F, E + F)
    target = evaluate(digits, beta)
    return Classification(f, Verdict.INFINITE_CAPABLE, reason, target, digits)


def decide_value_special(f: QuadPoly, digits: Sequence[int]) -> SpecialValue:
    """Value of p_beta on ``sum(digits[i] * beta**i)`` where it is known.

    Only monic ``f`` is covered.  With ``B >= 0, C > 0`` every value is
    infinite; with ``B > 0, -B-1 < C < 0`` the value is 1 exactly when every
    digit is at most ``-C - 1``, and infinite otherwise.
    """
    if not f.is_monic:
        raise DomainError("special values are characterised for monic polynomials only")
    if any(c < 0 for c in digits):
        raise DomainError("digits must be non-negative")
    B, C = f.B, f.C
    if B >= 0 and C > 0:
        return SpecialValue.INFINITY
    if B > 0 and -B - 1 < C < 0:
        if all(c <= -C - 1 for c in digits):
            return SpecialValue.ONE
        return SpecialValue.INFINITY
    return SpecialValue.UNKNOWN
