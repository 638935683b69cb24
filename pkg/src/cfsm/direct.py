"""Direct Fourier expansion baseline.

Every derivative ``u^(k)`` (or ``u^(k1,k2)``) gets its own truncated series,
computed by quadrature of that derivative. The basis for order ``k`` is the
k-th termwise derivative of the base kind's basis: full-range stays
full-range, while half-range sine and cosine alternate with each order
(a sine series differentiates into a cosine series). Nothing is
differentiated termwise, so the boundary behaviour of each expansion is that
of an ordinary Fourier series.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .domain import (
    Domain1D,
    Domain2D,
    FunctionSpec1D,
    FunctionSpec2D,
    MultiIndex,
    SeriesKind1D,
    SeriesKind2D,
    axis_kinds,
    check_kind_1d,
    check_kind_2d,
    check_order,
    enumerate_graded,
)
from .errors import OrderNotBuilt
from .quadrature import DEFAULT_RULE, QuadratureRule, sample_integrand, gauss_nodes, project_1d, project_2d, tensor_nodes
from .trig import TrigSeries1D, TrigSeries2D


_SWAP = {SeriesKind1D.FULL_RANGE: SeriesKind1D.FULL_RANGE,
         SeriesKind1D.HALF_SINE: SeriesKind1D.HALF_COSINE,
         SeriesKind1D.HALF_COSINE: SeriesKind1D.HALF_SINE}


def derivative_kind(kind: SeriesKind1D, k: int) -> SeriesKind1D:
    """Series kind spanned by the k-th derivatives of the ``kind`` basis."""
    return _SWAP[kind] if k % 2 else kind


@dataclass(frozen=True)
class DirectExpansion1D:
    kind: SeriesKind1D
    domain: Domain1D
    M: int
    series: dict[int, TrigSeries1D] = field(repr=False)

    def evaluate(self, k: int, x) -> np.ndarray:
        try:
            s = self.series[k]
        except KeyError:
            raise OrderNotBuilt(f"order {k} was not expanded") from None
        return s.evaluate(0, x)


@dataclass(frozen=True)
class DirectExpansion2D:
    kind: SeriesKind2D
    domain: Domain2D
    M: int
    N: int
    series: dict[MultiIndex, TrigSeries2D] = field(repr=False)

    def _get(self, k1, k2) -> TrigSeries2D:
        try:
            return self.series[MultiIndex(k1, k2)]
        except KeyError:
            raise OrderNotBuilt(f"order ({k1}, {k2}) was not expanded") from None

    def evaluate(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        return self._get(k1, k2).evaluate(0, 0, x1, x2)

    def evaluate_grid(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        return self._get(k1, k2).evaluate_grid(0, 0, x1, x2)


def build_direct_1d(f: FunctionSpec1D, kind: SeriesKind1D, r: int, M: int,
                    rule: QuadratureRule = DEFAULT_RULE) -> DirectExpansion1D:
    r = check_order(r)
    if M < 0:
        raise ValueError("M must be nonnegative")
    check_kind_1d(kind, f.domain)
    dom = f.domain
    x, w = gauss_nodes(dom.lo, dom.hi, M, rule)
    series = {k: project_1d(sample_integrand(lambda t: f(k, t), x), x, w, derivative_kind(kind, k),
                          dom.lo, dom.hi, M)
              for k in range(2 * r + 1)}
    return DirectExpansion1D(kind, dom, M, series)


def build_direct_2d(f: FunctionSpec2D, kind: SeriesKind2D, r: int, M: int, N: int,
                    rule: QuadratureRule = DEFAULT_RULE) -> DirectExpansion2D:
    r = check_order(r)
    if M < 0 or N < 0:
        raise ValueError("M and N must be nonnegative")
    check_kind_2d(kind, f.domain)
    grid = tensor_nodes(f.domain, M, N, rule)
    X1, X2 = np.meshgrid(grid[0][0], grid[1][0], indexing="ij")
    base = axis_kinds(kind)
    series = {}
    for idx in enumerate_graded(2 * r):
        kinds = (derivative_kind(base[0], idx.k1), derivative_kind(base[1], idx.k2))
        vals = sample_integrand(lambda a, b: f(idx.k1, idx.k2, a, b), X1, X2)
        series[idx] = project_2d(vals, grid, kinds, f.domain, M, N)
    return DirectExpansion2D(kind, f.domain, M, N, series)


def build_direct(f, kind, r: int, truncation, rule: QuadratureRule = DEFAULT_RULE):
    """Direct expansion of every derivative up to order ``2r``.

    ``truncation`` is ``M`` in 1D and ``(M, N)`` (or a single int used for
    both) in 2D.
    """
    if isinstance(f, FunctionSpec1D):
        return build_direct_1d(f, kind, r, int(truncation), rule)
    M, N = (truncation, truncation) if np.ndim(truncation) == 0 else truncation
    return build_direct_2d(f, kind, r, int(M), int(N), rule)


def evaluate_direct(d, *args) -> np.ndarray:
    """``evaluate_direct(d, k, x)`` in 1D, ``evaluate_direct(d, k1, k2, x1, x2)`` in 2D."""
    return d.evaluate(*args)
