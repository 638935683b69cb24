import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cfsm.errors import IllConditioned, SingularMatrix
from cfsm.linalg import LUFactor, solve, solve_multi


def test_identity_and_diagonal():
    np.testing.assert_array_equal(solve(np.eye(2), [3, 4]).solution, [3, 4])
    np.testing.assert_allclose(solve([[2, 0], [0, 4]], [0, -2]).solution, [0, -0.5], atol=0)


def test_multi_rhs_identity_and_linearity(rng):
    reps = solve_multi(np.eye(3), [[1, 2, 3], [4, 5, 6]])
    np.testing.assert_array_equal(reps[1].solution, [4, 5, 6])
    R = rng.normal(size=(6, 6)) + 6 * np.eye(6)
    q = rng.normal(size=6)
    x, x2 = (r.solution for r in solve_multi(R, [q, 2 * q]))
    np.testing.assert_allclose(x2, 2 * x, rtol=1e-14)


def test_multi_matches_single(rng):
    R = rng.normal(size=(6, 6)) + 6 * np.eye(6)
    Q = rng.normal(size=(3, 6))
    for q, rep in zip(Q, solve_multi(R, Q)):
        np.testing.assert_array_equal(rep.solution, solve(R, q).solution)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 30), st.integers(0, 2**31 - 1))
def test_roundtrip_well_conditioned(n, seed):
    g = np.random.default_rng(seed)
    R = g.normal(size=(n, n)) + n * np.eye(n)
    x = g.normal(size=n)
    got = solve(R, R @ x).solution
    assert np.linalg.norm(got - x) <= 1e-9 * np.linalg.norm(x)


def test_condition_estimate_close_to_exact(rng):
    R = rng.normal(size=(8, 8)) + 3 * np.eye(8)
    est = LUFactor(R).condition_estimate
    exact = np.linalg.cond(R, 1)
    assert exact / 10 <= est <= exact * 1.01


def test_singular_raises():
    with pytest.raises(SingularMatrix):
        LUFactor([[1.0, 2.0], [2.0, 4.0]])
    with pytest.raises(SingularMatrix):
        LUFactor(np.zeros((3, 3)))


def test_ill_conditioned_warns():
    R = np.diag([1.0, 1e-13])
    with pytest.warns(IllConditioned):
        LUFactor(R)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        LUFactor(np.eye(3))


def test_transposed_solve(rng):
    R = rng.normal(size=(5, 5)) + 5 * np.eye(5)
    q = rng.normal(size=5)
    np.testing.assert_allclose(R.T @ LUFactor(R).solve(q, trans=True), q, atol=1e-13)


def test_shape_errors():
    with pytest.raises(ValueError):
        LUFactor(np.ones((2, 3)))
    with pytest.raises(ValueError):
        LUFactor(np.eye(2)).solve([1.0, 2.0, 3.0])
