from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from betapart.errors import DivisionByZero, DomainError, ReducibleError
from betapart.quadfield import (QuadElem, QuadPoly, conjugate, evaluate, floor_div,
                                is_squarefree, normalize, parse_elem, roots, sign,
                                squarefree_decompose, trace_norm)

SQUAREFREE = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30]


def E(p, q, r, D):
    return normalize(p, q, r, D)


# --- frozen examples ---------------------------------------------------------

@pytest.mark.parametrize("args, expected", [
    ((2, 4, 6, 5), (1, 2, 3, 5)),
    ((1, 0, 1, 2), (1, 0, 1, 2)),
    ((-3, 0, -3, 3), (1, 0, 1, 3)),
])
def test_normalize_examples(args, expected):
    x = normalize(*args)
    assert (x.p, x.q, x.r, x.D) == expected


def test_normalize_errors():
    with pytest.raises(DivisionByZero):
        normalize(1, 1, 0, 2)
    with pytest.raises(DomainError):
        normalize(1, 1, 1, 4)
    with pytest.raises(DomainError):
        normalize(1, 1, 1, 1)
    with pytest.raises(DomainError):
        normalize(1, 1, 1, 12)


@pytest.mark.parametrize("args, expected", [
    ((3, -2, 1, 2), 1), ((0, 0, 1, 5), 0), ((1, -1, 1, 2), -1),
])
def test_sign_examples(args, expected):
    assert sign(E(*args)) == expected


def test_floor_div_examples():
    s2 = QuadElem.sqrt(2)
    assert floor_div(E(10, 0, 1, 2), s2) == 7
    assert floor_div(E(6, 0, 1, 3), E(3, 1, 1, 3)) == 1
    x = E(1, 1, 1, 5)
    assert floor_div(x, x) == 1
    with pytest.raises(DomainError):
        floor_div(x, -x)
    with pytest.raises(DomainError):
        floor_div(x, E(0, 0, 1, 5))


def test_conjugate_trace_norm_examples():
    x = E(3, 1, 1, 3)
    assert conjugate(x) == E(3, -1, 1, 3)
    assert trace_norm(x) == (6, 6)
    assert E(1, 1, 1, 5) * E(1, -1, 1, 5) == -4
    with pytest.raises(DivisionByZero):
        x / E(0, 0, 1, 3)


def test_roots_examples():
    b, bc = roots(QuadPoly(1, -6, 6))
    assert (b, bc) == (E(3, 1, 1, 3), E(3, -1, 1, 3))
    b, bc = roots(QuadPoly(1, -1, -1))
    assert (b, bc) == (E(1, 1, 2, 5), E(1, -1, 2, 5))
    with pytest.raises(ReducibleError):
        QuadPoly(1, -4, 4)
    with pytest.raises(ReducibleError):
        QuadPoly(1, -5, 6)
    with pytest.raises(DomainError):
        QuadPoly(2, 4, 6)
    with pytest.raises(DomainError):
        QuadPoly(-1, 0, 2)


def test_complex_roots_give_trace_and_norm():
    assert roots(QuadPoly(2, 1, 3)) == (Fraction(-1, 2), Fraction(3, 2))


def test_mixed_fields_rejected():
    with pytest.raises(DomainError):
        QuadElem.sqrt(2) + QuadElem.sqrt(3)


def test_text_format_round_trip():
    x = parse_elem("(3+1*sqrt(3))/1")
    assert x == E(3, 1, 1, 3)
    assert str(x) == "(3+1*sqrt(3))/1"
    assert parse_elem(str(E(-7, 4, 6, 5))) == E(-7, 4, 6, 5)
    assert parse_elem("5/2", 3) == E(5, 0, 2, 3)
    with pytest.raises(DomainError):
        parse_elem("(1+sqrt(3))/1", 5)
    with pytest.raises(DomainError):
        parse_elem("not an element")


def test_rational_equality_and_hash():
    x = E(6, 0, 3, 7)
    assert x == 2 and x == Fraction(2) and hash(x) == hash(2)
    assert {x: 1}[2] == 1


def test_squarefree_decompose():
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(72) == (6, 2)
    with pytest.raises(DomainError):
        squarefree_decompose(-20)
    assert is_squarefree(30) and not is_squarefree(18)


def test_poly_text_and_data():
    f = QuadPoly.parse("1,-6,6")
    assert (f.A, f.B, f.C, f.E, f.F, f.disc) == (1, -6, 6, 6, -6, 12)
    assert (f.trace, f.norm) == (6, 6)
    assert str(f) == "1,-6,6"


# --- properties --------------------------------------------------------------

ints = st.integers(-10**12, 10**12)
elems = st.builds(E, ints, ints, st.integers(1, 10**6), st.sampled_from(SQUAREFREE))


def _interval_sign(x):
    with mpmath.workprec(128):
        v = (mpmath.iv.mpf(x.p) + mpmath.iv.mpf(x.q) * mpmath.iv.sqrt(x.D)) / x.r
        if v.a > 0:
            return 1
        if v.b < 0:
            return -1
        return None


@settings(max_examples=2000)
@given(elems)
def test_sign_matches_interval_arithmetic(x):
    s = sign(x)
    assert s * sign(-x) == -s * s
    assert (s == 0) == (x.p == 0 and x.q == 0)
    ref = _interval_sign(x)
    if ref is not None:
        assert s == ref


@given(st.integers(1, 10**9), st.sampled_from(SQUAREFREE))
def test_sign_near_zero(k, D):
    # p + q*sqrt(D) with p/q a continued-fraction-like approximation
    from math import isqrt
    q = k
    p = isqrt(D * q * q)
    x = E(p, -q, 1, D)
    assert sign(x) == (-1 if p * p < D * q * q else 1)
    assert sign(E(p + 1, -q, 1, D)) == 1


@settings(max_examples=500)
@given(elems, elems)
def test_floor_div_brackets(x, y):
    if y.D != x.D:
        y = E(y.p, y.q, y.r, x.D)
    if sign(y) <= 0:
        y = -y
    if sign(y) == 0:
        return
    k = floor_div(x, y)
    assert k * y <= x < (k + 1) * y


@given(elems)
def test_normalize_idempotent_and_conjugation(x):
    assert normalize(x.p, x.q, x.r, x.D) == x
    y = normalize(x.p * 7, x.q * 7, x.r * 7, x.D)
    assert (y.p, y.q, y.r) == (x.p, x.q, x.r)
    assert conjugate(conjugate(x)) == x
    tr, nm = trace_norm(x)
    assert isinstance(tr, Fraction) and isinstance(nm, Fraction)
    assert x + conjugate(x) == tr and x * conjugate(x) == nm


@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    b = E(b.p, b.q, b.r, a.D)
    c = E(c.p, c.q, c.r, a.D)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    if sign(b) != 0:
        assert (a / b) * b == a
    r = a * b
    n = normalize(r.p, r.q, r.r, r.D)
    assert (r.p, r.q, r.r) == (n.p, n.q, n.r)


coeff = st.integers(-40, 40)


@given(st.integers(1, 40), coeff, coeff)
def test_roots_satisfy_polynomial(A, B, C):
    try:
        f = QuadPoly(A, B, C)
    except DomainError:
        return
    if not f.is_real:
        return
    b, bc = roots(f)
    for x in (b, bc):
        assert evaluate(f.coeffs, x) == 0
    assert b > bc
    assert b + bc == Fraction(-B, A) and b * bc == Fraction(C, A)
