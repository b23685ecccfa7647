"""Instance-level checks of the range and optimality results, as reports.

Each ``verify_*`` function returns a :class:`VerificationReport` carrying
every input, expected value and computed value; nothing is tolerated
silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from . import poly
from .enumerator import CountContext, count_integer_base
from .errors import DomainError
from .mary import afs_congruence_check
from .quadfield import QuadElem, QuadPoly, evaluate, roots


@dataclass
class Instance:
    input: Any
    expected: Any
    computed: Any
    ok: bool

    def to_dict(self) -> dict:
        return {"input": self.input, "expected": self.expected,
                "computed": self.computed, "ok": self.ok}


@dataclass
class VerificationReport:
    claim: str
    poly: str
    instances: list[Instance] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(i.ok for i in self.instances)

    def add(self, input, expected, computed, ok=None) -> None:
        if ok is None:
            ok = expected == computed
        self.instances.append(Instance(input, expected, computed, bool(ok)))

    def to_dict(self) -> dict:
        return {"claim": self.claim, "poly": self.poly, "all_ok": self.all_ok,
                "instances": [i.to_dict() for i in self.instances]}


def _monic_totally_positive(f: QuadPoly) -> tuple[int, int]:
    """``(E, C)`` for ``f = x^2 - E x + C`` with two positive real roots."""
    if not f.is_monic:
        raise DomainError(f"{f} is not monic")
    E, C = f.E, f.C
    if not (f.is_real and E >= 1 and C >= 1):
        raise DomainError(f"roots of {f} are not both positive reals")
    return E, C


def thm2_family(f: QuadPoly, n: int) -> list[tuple]:
    """The ``n + 1`` partitions of ``E*beta**n``: ``E x^n + (x^j + ... + x^(n-1)) f``."""
    E = f.E
    base = (0,) * n + (E,)
    out = []
    for j in range(n + 1):
        P = (0,) * j + (1,) * (n - j)
        out.append(poly.add(base, poly.mul(P, f.coeffs)))
    return sorted(out, key=lambda c: (len(c), c))


def verify_thm2(f: QuadPoly, n_max: int = 5) -> VerificationReport:
    """``p(E beta^n) == n + 1`` and the partitions are exactly the predicted ones."""
    E, C = _monic_totally_positive(f)
    if not E <= C < 2 * E - 4:
        raise DomainError(f"{f} violates Tr <= Nm < 2Tr - 4")
    ctx = CountContext(f)
    rep = VerificationReport("thm2", str(f))
    for n in range(n_max + 1):
        digits = (0,) * n + (E,)
        found = ctx.enumerate_digits(digits)
        rep.add({"n": n, "kind": "count"}, n + 1, ctx.count_digits(digits))
        rep.add({"n": n, "kind": "partitions"}, [list(q) for q in thm2_family(f, n)],
                [list(q) for q in found])
    return rep


def verify_lemmaE(f: QuadPoly, n: int) -> VerificationReport:
    """Every partition of ``E beta^n`` other than itself has leading term ``beta^(n+1)``."""
    E, _ = _monic_totally_positive(f)
    rep = VerificationReport("lemmaE", str(f))
    trivial = (0,) * n + (E,)
    for q in CountContext(f).enumerate_digits(trivial):
        if q == trivial:
            continue
        rep.add({"n": n, "partition": list(q)}, [n + 1, 1], [len(q) - 1, q[-1]])
    if not rep.instances:
        rep.add({"n": n, "partition": None}, "no nontrivial partition", "no nontrivial partition")
    return rep


def reciprocal_bound(f: QuadPoly) -> int:
    """``p_{1/beta}(E/beta)`` with ``1/beta`` a root of ``C t^2 - E t + 1``."""
    E, C = _monic_totally_positive(f)
    g = QuadPoly(C, -E, 1)
    beta = roots(f)[0]
    gamma = roots(g)[1]
    if gamma * beta != 1:
        raise AssertionError("smaller root of the reciprocal polynomial is not 1/beta")
    return CountContext(g, conjugate_root=True).count(E * gamma)


def verify_opt1(f: QuadPoly, n_max: int = 6) -> VerificationReport:
    """With ``Tr > Nm`` every ``p(E beta^n)`` is at most ``p_{1/beta}(E/beta)``."""
    E, C = _monic_totally_positive(f)
    if not E > C:
        raise DomainError(f"{f} needs Tr > Nm")
    bound = reciprocal_bound(f)
    ctx = CountContext(f)
    rep = VerificationReport("opt1", str(f))
    for n in range(n_max + 1):
        c = ctx.count_digits((0,) * n + (E,))
        rep.add({"n": n, "bound": bound}, f"<= {bound}", c, c <= bound)
    return rep


def opt2_expansions(f: QuadPoly) -> dict[str, list[tuple]]:
    """The displayed rewritings of ``E beta^2`` and ``E beta^3``."""
    E, C = f.E, f.C
    return {
        "E*b^2": [(0, 0, E), (0, C, 0, 1), (C, C - E, 1, 1), (2 * C, C - 2 * E, 2, 1)],
        "E*b^3": [(0, 0, 0, E), (0, 0, C, 0, 1), (0, C, C - E, 1, 1),
                  (C, C - E, C - E + 1, 1, 1),
                  (3 * C, 2 * C - 3 * E, C - 2 * E + 3, 2, 1)],
    }


def verify_opt2(f: QuadPoly) -> VerificationReport:
    """``C >= 2E`` gives ``p(E beta^2) >= 4``; ``C >= 2E - 3`` gives ``p(E beta^3) >= 5``."""
    E, C = _monic_totally_positive(f)
    cases = []
    if C >= 2 * E:
        cases.append(("E*b^2", 2, 4))
    if C >= 2 * E - 3:
        cases.append(("E*b^3", 3, 5))
    if not cases:
        raise DomainError(f"{f} needs Nm >= 2Tr - 3")
    beta = roots(f)[0]
    ctx = CountContext(f)
    rep = VerificationReport("opt2", str(f))
    exps = opt2_expansions(f)
    for key, n, lower in cases:
        target = (0,) * n + (E,)
        value = evaluate(target, beta)
        for q in exps[key]:
            ok = (poly.is_nonnegative(q) and evaluate(q, beta) == value
                  and poly.divides(f.coeffs, poly.sub(q, target)))
            rep.add({"target": key, "expansion": list(q)}, "non-negative, exact", ok, ok)
        c = ctx.count_digits(target)
        rep.add({"target": key, "kind": "count"}, f">= {lower}", c, c >= lower)
    return rep


def congruence_table(f: QuadPoly | int, targets: Sequence, moduli: Sequence[int]) -> list[dict]:
    """Residues of the partition count of each target; exploratory.

    ``f`` may be an integer base ``m``, in which case targets are integers
    and an ``afs`` column records the digit-product congruence for ``m*n``.
    """
    rows = []
    if isinstance(f, int):
        for n in targets:
            c = count_integer_base(f, n)
            row = {"target": str(n), "count": c}
            row.update({f"mod_{m}": c % m for m in moduli})
            if n % f == 0:
                row["afs"] = afs_congruence_check(f, n // f)[2]
            rows.append(row)
        return rows
    ctx = CountContext(f)
    for t in targets:
        if isinstance(t, QuadElem) or not isinstance(t, (tuple, list)):
            c = ctx.count(t)
            label = str(t)
        else:
            c = ctx.count_digits(t)
            label = poly.to_str(t)
        row = {"target": label, "count": c}
        row.update({f"mod_{m}": c % m for m in moduli})
        rows.append(row)
    return rows
