import numpy as np
import pytest
import sympy as sp

from cfsm.domain import SeriesKind1D, SeriesKind2D, finite_difference_mismatch
from cfsm.errors import UnknownSample
from cfsm.samples import SAMPLE_IDS, get_sample

x1, x2 = sp.symbols("x1 x2")
P = lambda t: sp.Rational(1, 2) - t - t ** 2 / 2 + t ** 3
SYMBOLIC = {
    1: P(x1), 2: sp.sin(sp.pi * x1 / 2), 3: P(x1), 4: sp.cos(sp.pi * x1 / 2),
    5: P(x1) * P(x2), 6: sp.sin(sp.pi * x1 / 2) * sp.cos(sp.pi * x2 / 2),
    7: P(x1) * P(x2), 8: sp.sin(sp.pi * x1 / 2) * sp.cos(sp.pi * x2 / 2),
}


def test_point_values():
    assert float(get_sample(1).spec(0, 0.0)) == 0.5
    assert float(get_sample(2).spec(0, 1.0)) == pytest.approx(1.0)
    assert float(get_sample(5).spec(1, 1, 1.0, 1.0)) == pytest.approx(1.0)


def test_kinds():
    kinds = {i: get_sample(i).kind for i in SAMPLE_IDS}
    assert kinds[1] is kinds[2] is SeriesKind1D.FULL_RANGE
    assert kinds[3] is kinds[4] is SeriesKind1D.HALF_SINE
    assert kinds[5] is kinds[6] is SeriesKind2D.FULL_RANGE
    assert kinds[7] is kinds[8] is SeriesKind2D.SIN_SIN
    assert [get_sample(i).dim for i in SAMPLE_IDS] == [1] * 4 + [2] * 4


@pytest.mark.parametrize("sid", SAMPLE_IDS)
def test_derivatives_match_symbolic(sid):
    case = get_sample(sid)
    expr = SYMBOLIC[sid]
    pts = np.linspace(case.domain.x1.lo if case.dim == 2 else case.domain.lo, 1.0, 5)
    for k1 in range(7):
        for k2 in range(7 - k1 if case.dim == 2 else 1):
            d = sp.lambdify((x1, x2), sp.diff(expr, x1, k1, x2, k2), "numpy")
            if case.dim == 1:
                got, want = case.spec(k1, pts), np.broadcast_to(d(pts, 0.0), pts.shape)
            else:
                got, want = case.spec(k1, k2, pts, pts[::-1]), np.broadcast_to(d(pts, pts[::-1]), pts.shape)
            np.testing.assert_allclose(got, want, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("sid", SAMPLE_IDS)
def test_finite_difference_consistency(sid):
    case = get_sample(sid)
    rng = np.random.default_rng(sid)
    lo = -0.9 if case.domain.kind.value == "symmetric" else 0.1
    pts = rng.uniform(lo, 0.9, 10)
    probe = pts if case.dim == 1 else (pts, rng.uniform(lo, 0.9, 10))
    assert finite_difference_mismatch(case.spec, 6, probe) < 1e-5


def test_scaled_domain():
    case = get_sample(2, a=2.0)
    assert float(case.spec(0, 2.0)) == pytest.approx(1.0)
    assert float(case.spec(1, 0.0)) == pytest.approx(np.pi / 4)


@pytest.mark.parametrize("bad", [0, 9, 99])
def test_unknown(bad):
    with pytest.raises(UnknownSample):
        get_sample(bad)
