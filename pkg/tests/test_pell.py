import pytest
from hypothesis import given, settings, strategies as st

from betapart.enumerator import CountContext
from betapart.errors import ConsistencyError, DomainError
from betapart.pell import (PellSolution, corollary3_family, family_rows,
                           fundamental_solution, solutions)
from betapart.quadfield import QuadElem, QuadPoly, is_squarefree, roots

SQUAREFREE = [d for d in range(2, 80) if is_squarefree(d)]


@pytest.mark.parametrize("D, xy", [(2, (3, 2)), (5, (9, 4)), (3, (2, 1)), (6, (5, 2)),
                                   (7, (8, 3)), (13, (649, 180)), (61, (1766319049, 226153980))])
def test_fundamental(D, xy):
    s = fundamental_solution(D)
    assert (s.x, s.y) == xy


def test_errors():
    for D in (4, 1, 0, -3):
        with pytest.raises(DomainError):
            fundamental_solution(D)
    with pytest.raises(ConsistencyError):
        PellSolution(2, 2, 2)
    with pytest.raises(DomainError):
        corollary3_family(8, 2)
    with pytest.raises(DomainError):
        corollary3_family(2, 0)


@pytest.mark.parametrize("D, poly, beta", [
    (2, QuadPoly(1, -8, 8), (4, 2)),
    (3, QuadPoly(1, -6, 6), (3, 1)),
    (5, QuadPoly(1, -20, 20), (10, 4)),
])
def test_first_family_member(D, poly, beta):
    f = corollary3_family(D, 1)[0]
    assert f == poly
    E, C = f.E, f.C
    assert E <= C < 2 * E - 4
    assert roots(f)[0] == QuadElem(beta[0], beta[1], 1, D)


def test_rows():
    assert family_rows(2, 2) == [
        {"x": 3, "y": 2, "a": 4, "b": 2, "Tr": 8, "Nm": 8},
        {"x": 17, "y": 12, "a": 18, "b": 12, "Tr": 36, "Nm": 36},
    ]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SQUAREFREE))
def test_solutions_increase_and_satisfy(D):
    it = solutions(D)
    prev = 0
    for _ in range(5):
        s = next(it)
        assert s.x * s.x - D * s.y * s.y == 1 and s.x > prev
        prev = s.x


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SQUAREFREE))
def test_family_members_satisfy_theorem2(D):
    for f in corollary3_family(D, 2):
        b, bc = roots(f)
        assert b > 0 and bc > 0
        assert f.E <= f.C < 2 * f.E - 4
        ctx = CountContext(f)
        for n in range(5):
            assert ctx.count_digits((0,) * n + (f.E,)) == n + 1


def test_large_pell_bases_stay_fast():
    # discriminants with 80+ digits need real factoring, not trial division
    for D in (61, 109):
        for f in corollary3_family(D, 4):
            ctx = CountContext(f)
            assert [ctx.count_digits((0,) * n + (f.E,)) for n in range(5)] == [1, 2, 3, 4, 5]
