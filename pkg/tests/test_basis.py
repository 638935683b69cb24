import numpy as np
import pytest
import sympy as sp

from cfsm.basis import (
    BasisOperator,
    apply_rows_to_family,
    apply_rows_to_function,
    basis_operator,
    boundary_rows_1d,
    build_boundary_matrix_1d,
    build_corner_matrix,
    corner_rows,
    default_basis_1d,
    default_corner_basis,
    monomial_family_1d,
    polynomial_family_1d,
    polynomial_family_corner,
)
from cfsm.domain import FunctionSpec1D, SeriesKind1D, SeriesKind2D
from cfsm.errors import SingularMatrix
from cfsm.samples import get_sample

KINDS_1D = list(SeriesKind1D)
KINDS_2D = [SeriesKind2D.FULL_RANGE, SeriesKind2D.SIN_SIN]


def test_family_members():
    fam = polynomial_family_1d(SeriesKind1D.FULL_RANGE, 3, 1.0)
    assert fam.eval(1, 0, 0.5) == pytest.approx(0.25)
    hs = polynomial_family_1d(SeriesKind1D.HALF_SINE, 3, 1.0)
    np.testing.assert_array_equal(hs.eval(0, 0, np.linspace(0, 1, 4)), np.ones(4))
    fr1 = polynomial_family_1d(SeriesKind1D.FULL_RANGE, 1, 2.0)
    assert fr1.eval(1, 1, 2.0) == pytest.approx(1.0)


def test_corner_family_sizes():
    assert polynomial_family_corner(SeriesKind2D.FULL_RANGE, 3, 1, 1).size == 15
    assert polynomial_family_corner(SeriesKind2D.SIN_SIN, 3, 1, 1).size == 24
    fr1 = polynomial_family_corner(SeriesKind2D.FULL_RANGE, 1, 1, 1)
    assert fr1.exponents == ((1, 1),)
    assert build_corner_matrix(fr1, SeriesKind2D.FULL_RANGE, 1, 1, 1).tolist() == [[4.0]]


def test_small_matrices():
    fam = polynomial_family_1d(SeriesKind1D.FULL_RANGE, 1, 1.0)
    np.testing.assert_array_equal(build_boundary_matrix_1d(fam, SeriesKind1D.FULL_RANGE, 1, 1.0), [[2, 0], [0, 4]])
    hs = polynomial_family_1d(SeriesKind1D.HALF_SINE, 1, 1.0)
    np.testing.assert_array_equal(build_boundary_matrix_1d(hs, SeriesKind1D.HALF_SINE, 1, 1.0), [[1, 1], [1, 0]])


@pytest.mark.parametrize("kind", KINDS_1D)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_boundary_matrix_against_sympy(kind, r):
    a = 1.5
    x = sp.symbols("x")
    fam = polynomial_family_1d(kind, r, a)
    members = [(x / sp.Rational(3, 2)) ** e for e in fam.exponents]
    R = build_boundary_matrix_1d(fam, kind, r, a)
    for i, row in enumerate(boundary_rows_1d(kind, r, a)):
        for j, m in enumerate(members):
            d = sp.diff(m, x, row.order)
            val = sum(sign * float(d.subs(x, pt)) for pt, sign in row.terms)
            assert R[i, j] == pytest.approx(val, rel=1e-13, abs=1e-13)


def test_sample1_boundary_solve():
    basis = default_basis_1d(SeriesKind1D.FULL_RANGE, 3, 1.0)
    a1 = basis.coefficients([0, -2, 12, 0, 0, 0])
    np.testing.assert_allclose(a1, [-1, -0.5, 1, 0, 0, 0], atol=1e-13)
    val = basis.evaluate(np.array([0, -2, 12, 0, 0, 0.0]), 0, 0.3)
    assert val == pytest.approx(-0.3 - 0.045 + 0.027, abs=1e-14)


def test_identity_basis_is_family():
    fam = monomial_family_1d([1, 2], 1.0, "t")
    op = basis_operator(fam, np.eye(2))
    x = np.linspace(-1, 1, 5)
    np.testing.assert_allclose(op.basis(0, x), fam.values(0, x), atol=0)


@pytest.mark.parametrize("kind", KINDS_1D)
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_interpolation_property_1d(kind, r):
    op = default_basis_1d(kind, r, 1.3)
    rows = boundary_rows_1d(kind, r, 1.3)
    got = np.zeros((len(rows), op.size))
    for i, row in enumerate(rows):
        for pt, sign in row.terms:
            got[i] += sign * op.basis(row.order, pt)
    np.testing.assert_allclose(got, np.eye(op.size), atol=1e-9)
    assert op.R_condition < 1e10


@pytest.mark.parametrize("kind", KINDS_2D)
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_interpolation_property_corner(kind, r):
    op = default_corner_basis(kind, r, 1.0, 0.8)
    rows = corner_rows(kind, r, 1.0, 0.8)
    got = np.zeros((len(rows), op.size))
    for i, row in enumerate(rows):
        for pt, sign in row.terms:
            got[i] += sign * op.basis(tuple(row.order), *pt)
    np.testing.assert_allclose(got, np.eye(op.size), atol=1e-9)
    assert op.R_condition < 1e10


def test_full_range_r2_corner_nonsingular():
    op = default_corner_basis(SeriesKind2D.FULL_RANGE, 2, 1, 1)
    assert op.size == 6 and op.R_condition < 1e8


def test_sinsin_table_q3_reproduces_corner_values():
    q3 = np.zeros(24)
    q3[[4, 7, 10, 14, 16, 18, 19, 20, 22]] = [25, 2.5, -5, 2.5, -5, 0.25, -0.5, -0.5, 1]
    op = default_corner_basis(SeriesKind2D.SIN_SIN, 3, 1, 1)
    u = get_sample(7).spec
    for x1, x2 in [(1, 1), (1, 0), (0, 1), (0, 0)]:
        assert op.evaluate(q3, (0, 0), x1, x2) == pytest.approx(float(u(0, 0, x1, x2)), abs=1e-12)


@pytest.mark.parametrize("kind", KINDS_1D)
def test_family_derivative_consistency(kind):
    fam = polynomial_family_1d(kind, 3, 1.0)
    x = np.linspace(-0.9, 0.9, 7) if kind is SeriesKind1D.FULL_RANGE else np.linspace(0.1, 0.9, 7)
    h = 1e-5
    for j in range(fam.size):
        for k in range(1, 7):
            fd = (fam.eval(j, k - 1, x + h) - fam.eval(j, k - 1, x - h)) / (2 * h)
            exact = fam.eval(j, k, x)
            assert np.max(np.abs(fd - exact)) <= 1e-6 * max(1.0, np.max(np.abs(exact)))


def test_rows_applied_to_function():
    f = FunctionSpec1D(get_sample(3).domain, lambda k, x: get_sample(3).spec(k, x))
    q = apply_rows_to_function(boundary_rows_1d(SeriesKind1D.HALF_SINE, 3, 1.0), f)
    np.testing.assert_allclose(q, [0, 5, 0, 0.5, -1, 0], atol=1e-14)


def test_singular_family_rejected():
    fam = monomial_family_1d([2, 4], 1.0, "even only")
    with pytest.raises(SingularMatrix):
        basis_operator(fam, apply_rows_to_family(boundary_rows_1d(SeriesKind1D.FULL_RANGE, 1, 1.0), fam))
    with pytest.raises(ValueError):
        build_boundary_matrix_1d(fam, SeriesKind1D.FULL_RANGE, 2, 1.0)


def test_many_rhs_matches_single(rng):
    op = default_basis_1d(SeriesKind1D.FULL_RANGE, 3, 1.0)
    Q = rng.normal(size=(6, 4))
    A = op.coefficients_many(Q)
    for j in range(4):
        np.testing.assert_array_equal(A[:, j], op.coefficients(Q[:, j]))
    assert isinstance(op, BasisOperator)
