import numpy as np
import pytest

from cfsm.direct import build_direct, derivative_kind, evaluate_direct
from cfsm.domain import FunctionSpec1D, FunctionSpec2D, SeriesKind1D, SeriesKind2D
from cfsm.errors import OrderNotBuilt
from cfsm.metrics import error_report, make_grid
from cfsm.samples import get_sample
from cfsm.series1d import build_composite_1d
from cfsm.series2d import build_composite_2d
from cfsm.trig import cos_derivative

from conftest import SYM1


def test_single_cosine_mode():
    f = FunctionSpec1D(SYM1, lambda k, x: cos_derivative(k, np.pi, x))
    d = build_direct(f, SeriesKind1D.FULL_RANGE, 1, 5)
    c = d.series[0].stacked
    assert c[1] == pytest.approx(1.0, abs=1e-13)
    assert np.max(np.abs(np.delete(c, 1))) < 1e-13


def test_each_order_is_independent():
    c = get_sample(2)
    d = build_direct(c.spec, c.kind, 3, 10)
    # sin(pi x / 2) has a jump in its periodic extension, its derivative does not
    assert abs(float(evaluate_direct(d, 0, 1.0))) < 1e-12
    assert float(evaluate_direct(d, 1, 1.0)) == pytest.approx(0.0, abs=0.05)
    assert float(evaluate_direct(d, 1, 0.0)) == pytest.approx(np.pi / 2, rel=5e-3)


def test_order_not_built():
    c = get_sample(2)
    d = build_direct(c.spec, c.kind, 1, 4)
    with pytest.raises(OrderNotBuilt):
        d.evaluate(3, 0.0)
    c8 = get_sample(8)
    d8 = build_direct(c8.spec, c8.kind, 1, 3)
    with pytest.raises(OrderNotBuilt):
        evaluate_direct(d8, 2, 1, 0.5, 0.5)


def test_derivative_kind_alternates_for_half_range():
    assert derivative_kind(SeriesKind1D.HALF_SINE, 3) is SeriesKind1D.HALF_COSINE
    assert derivative_kind(SeriesKind1D.HALF_COSINE, 2) is SeriesKind1D.HALF_COSINE
    assert derivative_kind(SeriesKind1D.FULL_RANGE, 5) is SeriesKind1D.FULL_RANGE


def test_partial_sum_matches_independent_summation():
    c = get_sample(2)
    d = build_direct(c.spec, c.kind, 3, 40)
    s = d.series[0]
    m = np.arange(41)
    manual = 0.5 * s.cos[0] + np.sum(s.cos[1:] * np.cos(m[1:] * np.pi * 0.5)) + np.sum(s.sin * np.sin(m * np.pi * 0.5))
    assert float(d.evaluate(0, 0.5)) == pytest.approx(manual, abs=1e-15)
    # the sine coefficients of sin(pi x/2) on [-1,1] are known in closed form
    closed = np.array([(-1) ** (k + 1) * 2 * k / (np.pi * (k ** 2 - 0.25)) for k in m[1:]])
    np.testing.assert_allclose(s.sin[1:], closed, atol=1e-13)


def test_interior_error_decreases_with_truncation():
    c = get_sample(2)
    g = make_grid(c.domain, 1001)
    errs = [error_report(build_direct(c.spec, c.kind, 3, M), c.spec, 0, g).singles["interior"][0]
            for M in (2, 10, 40)]
    assert errs[0] > errs[1] > errs[2]


def test_agrees_with_composite_for_periodic_compatible_input():
    f = FunctionSpec1D(SYM1, lambda k, x: cos_derivative(k, 3 * np.pi, x))
    d = build_direct(f, SeriesKind1D.FULL_RANGE, 3, 8)
    s = build_composite_1d(f, SeriesKind1D.FULL_RANGE, 3, 8)
    x = np.linspace(-0.9, 0.9, 13)
    np.testing.assert_allclose(d.evaluate(0, x), s.evaluate(0, x), atol=1e-8)
    c5 = get_sample(5)
    s5 = build_composite_2d(c5.spec, c5.kind, 3, 6, 6)
    resid = lambda k1, k2, a, b: s5.internal_part(k1, k2, a, b)
    d5 = build_direct(FunctionSpec2D(c5.domain, resid), SeriesKind2D.FULL_RANGE, 1, 6)
    x1, x2 = np.meshgrid(x, x, indexing="ij")
    np.testing.assert_allclose(d5.evaluate(0, 0, x1, x2), s5.internal_part(0, 0, x1, x2), atol=1e-8)


@pytest.mark.parametrize("sid,expected", [(2, 1.0), (4, 0.5)])
def test_sixth_order_boundary_error(sid, expected):
    c = get_sample(sid)
    g = make_grid(c.domain, 101)
    rep = error_report(build_direct(c.spec, c.kind, 3, 40), c.spec, 6, g)
    assert rep.singles["boundary"][6] == pytest.approx(expected, abs=1e-6)
