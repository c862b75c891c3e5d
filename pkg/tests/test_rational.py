from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semigraphoids import rational
from semigraphoids.rational import FeasibilityProblem, solve_feasibility

small = st.integers(min_value=-4, max_value=4)
matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_examples():
    assert rational.rank([[1, 2], [2, 4]]) == 1
    assert rational.rank([[1, 0], [0, 1]]) == 2
    assert rational.rank([[0, 0, 0]]) == 0


@given(matrices)
def test_rank_nullity(M):
    cols = len(M[0])
    K = rational.kernel_basis(M)
    assert rational.rank(M) + len(K) == cols
    for v in K:
        assert all(x == 0 for x in rational.matvec(M, v))


@given(matrices)
def test_rref_is_exact(M):
    R, pivots = rational.rref(M)
    assert all(isinstance(x, (int, Fraction)) for row in R for x in row)
    assert len(pivots) == rational.rank(M)


@given(matrices, st.lists(small, min_size=5, max_size=5))
def test_feasibility_answers_verify(M, x0):
    """Feasible problems are built from a known point; every answer is re-checked."""
    x0 = [abs(v) for v in x0[: len(M[0])]]
    f = rational.matvec(M, x0)
    p = FeasibilityProblem(M, f, [0] * len(x0))
    res = solve_feasibility(p)
    assert res.feasible
    assert rational.check_witness(p, res.witness)


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_feasibility_random_rhs(M, f):
    p = FeasibilityProblem(M, f[: len(M)], [0] * len(M[0]))
    res = solve_feasibility(p)
    if res.feasible:
        assert rational.check_witness(p, res.witness)
    else:
        assert rational.check_certificate(p, res.certificate)


def test_infeasible_has_farkas_certificate():
    p = FeasibilityProblem([[1, 1]], [-1], [0, 0])
    res = solve_feasibility(p)
    assert not res.feasible
    assert rational.check_certificate(p, res.certificate)


def test_free_variables():
    p = FeasibilityProblem([[1, 1]], [-1], [None, 0])
    res = solve_feasibility(p)
    assert res.feasible and rational.check_witness(p, res.witness)


def test_lower_bounds_shift():
    p = FeasibilityProblem([[1, 1]], [1], [1, 1])
    assert not solve_feasibility(p).feasible
    assert solve_feasibility(FeasibilityProblem([[1, 1]], [2], [1, 1])).feasible


def test_cone_dimension_and_single_ray():
    E = [[1, -1, 0], [0, 1, -1]]
    assert rational.cone_dimension(E) == 1
    assert rational.single_ray_generator(E) == [1, 1, 1]
    assert rational.cone_dimension([[1, 1]]) == 0


def test_matrix_text_round_trip():
    M = [[Fraction(1, 2), 3], [-4, Fraction(-5, 7)]]
    assert rational.parse_matrix(rational.format_matrix(M)) == M


@pytest.mark.parametrize("bad", ["2 2\n1 2\n3", "x\n", "1 1\n1/0\n"])
def test_matrix_parse_errors(bad):
    with pytest.raises(ValueError):
        rational.parse_matrix(bad)


def test_primitive():
    assert rational.primitive([Fraction(1, 2), Fraction(3, 2)]) == [1, 3]
    assert rational.primitive([0, -4, 6]) == [0, -2, 3]
