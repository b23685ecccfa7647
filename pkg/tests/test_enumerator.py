import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from betapart.classifier import classify
from betapart.enumerator import (CountContext, count, count_descending, enumerate_partitions,
                                 matched_caps, oracle_count, oracle_partitions,
                                 recurrence_check, sort_partitions)
from betapart.errors import DomainError, RegimeError, ResourceError
from betapart.quadfield import QuadElem, QuadPoly, evaluate, roots

F6 = QuadPoly(1, -6, 6)
BETA6 = roots(F6)[0]


def test_theorem2_instance():
    assert count(F6, 6 * BETA6) == 2
    assert enumerate_partitions(F6, 6 * BETA6) == [(0, 6), (6, 0, 1)]
    assert enumerate_partitions(F6, QuadElem.from_rational(6, 3)) == [(6,)]
    assert count_descending(F6, 6 * BETA6) == 2


@pytest.mark.parametrize("f", [QuadPoly(1, -6, 6), QuadPoly(1, -1, -1), QuadPoly(1, -3, 1),
                               QuadPoly(2, -7, 2), QuadPoly(1, -4, 2)])
def test_one_has_one_partition(f):
    assert count(f, 1) == 1
    assert count(f, 0) == 1  # the zero polynomial
    assert enumerate_partitions(f, 0) == [()]


def test_x2_3x_1_against_oracle():
    f = QuadPoly(1, -3, 1)
    beta = roots(f)[0]
    n = count(f, 3 * beta)
    caps = matched_caps(f, (0, 3))
    assert n == oracle_count(f, (0, 3), caps.max_deg, caps.coeff_cap, caps.q_cap)
    assert n == count_descending(f, 3 * beta)


def test_negative_target_has_no_partition():
    for f in (F6, QuadPoly(1, -4, 2), QuadPoly(1, -5, 3)):
        assert enumerate_partitions(f, -1) == []
        assert count(f, -1) == 0


def test_oracle_examples():
    assert oracle_count(F6, (0, 6), 2, 10) == 2
    assert oracle_partitions(F6, (0, 6), 2, 10) == [(0, 6), (6, 0, 1)]
    f = QuadPoly(1, -4, 2)
    beta = roots(f)[0]
    caps = matched_caps(f, (0, 4))
    assert oracle_count(f, (0, 4), caps.max_deg, caps.coeff_cap, caps.q_cap) == count(f, 4 * beta)
    # P = 0 is always counted
    assert oracle_count(f, (3, 1, 4), 0, 0) == 1
    with pytest.raises(DomainError):
        oracle_count(f, (1, -1), 2, 3)


def test_recurrence_examples():
    assert recurrence_check(F6, 6)
    assert recurrence_check(QuadPoly(1, -1, -1), 1)
    # alpha with no partition, beta*alpha - 1 with none
    assert recurrence_check(F6, -5)


def test_regime_and_resource_errors():
    with pytest.raises(RegimeError):
        count(QuadPoly(1, 2, -1), 1)
    with pytest.raises(RegimeError):
        count(QuadPoly(1, 1, 1), 1)
    with pytest.raises(ResourceError):
        CountContext(QuadPoly(1, -1, -1), max_nodes=5).count_digits((0,) * 30 + (4,))


def test_golden_ratio_small_values():
    f = QuadPoly(1, -1, -1)
    ctx = CountContext(f)
    assert ctx.count_digits((2, 3)) == 6
    for q in ctx.enumerate_digits((2, 3)):
        assert evaluate(q, ctx.beta) == evaluate((2, 3), ctx.beta)


def test_sort_order():
    assert sort_partitions([(1, 0, 1), (3,), (0, 2), (1, 1)]) == [(3,), (0, 2), (1, 1), (1, 0, 1)]


def test_shared_memo_is_reused():
    ctx = CountContext(F6)
    ctx.count_digits((0, 0, 0, 6))
    size = len(ctx.memo)
    assert ctx.count_digits((0, 0, 0, 6)) == 4 and len(ctx.memo) == size


# --- properties --------------------------------------------------------------

def _finite(A, B, C):
    try:
        f = QuadPoly(A, B, C)
    except DomainError:
        return None
    if not f.is_real or not classify(f).always_finite:
        return None
    return f


@st.composite
def finite_instance(draw, max_digit=4, max_len=4):
    A = draw(st.integers(1, 4))
    B = draw(st.integers(-9, 9))
    C = draw(st.integers(-9, 9))
    f = _finite(A, B, C)
    assume(f is not None)
    digits = tuple(draw(st.lists(st.integers(0, max_digit), min_size=1, max_size=max_len)))
    # keep each example cheap: bases barely above 1 with B > 0 explode
    try:
        CountContext(f, max_nodes=20_000).count_digits(digits)
    except ResourceError:
        assume(False)
    return f, digits


SETTINGS = settings(max_examples=80, deadline=None,
                    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])


@SETTINGS
@given(finite_instance())
def test_enumerate_reevaluates(inst):
    f, digits = inst
    ctx = CountContext(f)
    alpha = evaluate(digits, ctx.beta)
    parts = ctx.enumerate(alpha)
    assert len(parts) == ctx.count(alpha) == ctx.count_digits(digits)
    assert len(set(parts)) == len(parts)
    for q in parts:
        assert all(a >= 0 for a in q) and (not q or q[-1] > 0)
        assert evaluate(q, ctx.beta) == alpha
    assert parts == sort_partitions(parts)


@SETTINGS
@given(finite_instance())
def test_conjugation_bijection(inst):
    f, digits = inst
    beta, beta_c = roots(f)
    alpha = evaluate(digits, beta)
    assert count(f, alpha) == count(f, alpha.conjugate(), conjugate_root=True)
    assert evaluate(digits, beta_c) == alpha.conjugate()


@SETTINGS
@given(finite_instance(max_digit=3, max_len=3))
def test_peel_equals_descending(inst):
    f, digits = inst
    alpha = evaluate(digits, roots(f)[0])
    assert count(f, alpha) == count_descending(f, alpha)


@settings(max_examples=40, deadline=None,
          suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(finite_instance(max_digit=3, max_len=3))
def test_peel_equals_oracle(inst):
    f, digits = inst
    caps = matched_caps(f, digits)
    ctx = CountContext(f)
    assert ctx.count_digits(digits) == oracle_count(f, digits, caps.max_deg, caps.coeff_cap,
                                                   caps.q_cap)


@SETTINGS
@given(finite_instance(), st.booleans())
def test_recurrence_identity(inst, conj):
    f, digits = inst
    beta = roots(f)[1 if conj else 0]
    assume(f.is_real)
    ctx = CountContext(f, conjugate_root=conj)
    alpha = evaluate(digits, beta)
    assert ctx.count(beta * alpha) == ctx.count(beta * alpha - 1) + ctx.count(alpha)
