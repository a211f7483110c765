import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gpsel.errors import Infeasible, ShapeMismatch, Unbounded
from gpsel.simplex import LpProblem, dual_simplex_path, simplex_solve
from oracles import vertex_enumeration


def random_lp(rng, m=None, n=None):
    m = m or int(rng.integers(2, 5))
    n = n or int(rng.integers(2, 5))
    A = rng.uniform(0.1, 2.0, (m, n))
    b = rng.uniform(1.0, 5.0, m)
    sense = ["<="] * m
    # one lower-bound row keeps phase one busy, stays feasible at x = small multiple of ones
    x0 = np.full(n, 0.05)
    A2 = rng.uniform(0.1, 1.0, (1, n))
    A = np.vstack([A, A2])
    b = np.concatenate([b, A2 @ x0])
    sense.append(">=")
    c = rng.normal(size=n)
    return LpProblem(c, A, b, tuple(sense))


@pytest.mark.parametrize("seed", range(50))
def test_against_vertex_enumeration(seed):
    lp = random_lp(np.random.default_rng(seed))
    x, obj = simplex_solve(lp)
    x_ref, obj_ref = vertex_enumeration(lp)
    assert obj == pytest.approx(obj_ref, abs=1e-8, rel=1e-8)
    A, b = lp.constraint_matrix, lp.rhs
    assert np.all(x >= 0)
    assert np.all(A[:-1] @ x <= b[:-1] + 1e-9) and A[-1] @ x >= b[-1] - 1e-9


def test_equality_constraints():
    lp = LpProblem([1.0, 2.0, 0.0], [[1, 1, 1], [1, -1, 0]], [4.0, 1.0], ("=", "="))
    x, obj = simplex_solve(lp)
    x_ref, obj_ref = vertex_enumeration(lp)
    assert obj == pytest.approx(obj_ref, abs=1e-10)
    np.testing.assert_allclose(lp.constraint_matrix @ x, lp.rhs, atol=1e-10)


def test_negative_rhs_rows_are_flipped():
    # x1 + x2 >= 2 written as -x1 - x2 <= -2
    x, obj = simplex_solve(LpProblem([1.0, 3.0], [[-1, -1]], [-2.0], ("<=",)))
    assert obj == pytest.approx(2.0)
    np.testing.assert_allclose(x, [2.0, 0.0], atol=1e-12)


def test_degenerate_cycling_example_terminates():
    # classic instance on which the largest-coefficient rule cycles
    c = [-0.75, 150.0, -0.02, 6.0]
    A = [[0.25, -60.0, -0.04, 9.0], [0.5, -90.0, -0.02, 3.0], [0.0, 0.0, 1.0, 0.0]]
    x, obj = simplex_solve(LpProblem(c, A, [0.0, 0.0, 1.0], ("<=",) * 3))
    assert obj == pytest.approx(-0.05, abs=1e-12)


def test_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        simplex_solve(LpProblem([1.0], [[1.0], [1.0]], [1.0, 2.0], ("<=", ">=")))
    with pytest.raises(Unbounded):
        simplex_solve(LpProblem([-1.0, 0.0], [[1.0, -1.0]], [1.0], ("<=",)))


def test_validation():
    with pytest.raises(ShapeMismatch):
        LpProblem([1.0, 1.0], [[1.0]], [1.0], ("<=",))
    with pytest.raises(ValueError):
        LpProblem([1.0], [[1.0]], [1.0], ("<",))
    with pytest.raises(ShapeMismatch):
        LpProblem(np.ones(501), np.ones((1, 501)), [1.0], ("<=",))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_dual_path_matches_cold_solves(seed):
    rng = np.random.default_rng(seed)
    m, n = 4, 3
    A = rng.normal(size=(m, n))
    c = rng.uniform(0.5, 2.0, n)
    b0 = rng.uniform(0.0, 1.0, m)
    d = rng.uniform(0.5, 1.5, m)
    ts = np.linspace(2.0, 0.0, 7)
    try:
        path = dual_simplex_path(A, c, b0, d, ts)
    except Infeasible:
        for t in ts:
            try:
                simplex_solve(LpProblem(c, A, b0 + t * d, ("<=",) * m))
            except Infeasible:
                return
        raise
    for t, x in zip(ts, path):
        _, obj = simplex_solve(LpProblem(c, A, b0 + t * d, ("<=",) * m))
        assert c @ x == pytest.approx(obj, abs=1e-9)
        assert np.all(A @ x <= b0 + t * d + 1e-9)
