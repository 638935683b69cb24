"""Composite Gauss-Legendre quadrature and Fourier coefficient extraction.

Integrands in this package are (polynomial) x (trigonometric) products, so
fixed Gauss-Legendre panels whose count grows with the highest wavenumber
are exact to round-off; no adaptivity is needed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .domain import Domain1D, Domain2D, SeriesKind1D, SeriesKind2D, axis_kinds, check_kind_1d, check_kind_2d
from .errors import NonFiniteIntegrand
from .trig import TrigSeries1D, TrigSeries2D, trig_design, wave_unit


@dataclass(frozen=True)
class QuadratureRule:
    nodes_per_panel: int = 16
    panels_base: int = 4

    def __post_init__(self):
        if self.nodes_per_panel < 8:
            raise ValueError("nodes_per_panel must be >= 8")
        if self.panels_base < 4:
            raise ValueError("panels_base must be >= 4")

    def panels(self, oscillation_index: int) -> int:
        return max(self.panels_base, 2 * int(oscillation_index))


DEFAULT_RULE = QuadratureRule()


@lru_cache(maxsize=64)
def _nodes(lo: float, hi: float, panels: int, order: int):
    t, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    wt = (half[:, None] * w[None, :]).ravel()
    x.flags.writeable = False
    wt.flags.writeable = False
    return x, wt


def gauss_nodes(lo: float, hi: float, oscillation_index: int = 0, rule: QuadratureRule = DEFAULT_RULE):
    """Nodes and weights of the composite rule on ``[lo, hi]``."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    return _nodes(float(lo), float(hi), rule.panels(oscillation_index), rule.nodes_per_panel)


def sample_integrand(g, *points) -> np.ndarray:
    vals = np.broadcast_to(np.asarray(g(*points), dtype=float), points[0].shape)
    if not np.all(np.isfinite(vals)):
        raise NonFiniteIntegrand("integrand is not finite at some quadrature node")
    return vals


def integrate_1d(g, lo: float, hi: float, oscillation_index: int = 0,
                 rule: QuadratureRule = DEFAULT_RULE) -> float:
    x, w = gauss_nodes(lo, hi, oscillation_index, rule)
    return float(w @ sample_integrand(g, x))


def integrate_2d(g, domain: Domain2D, osc1: int = 0, osc2: int = 0,
                 rule: QuadratureRule = DEFAULT_RULE) -> float:
    x1, w1 = gauss_nodes(domain.x1.lo, domain.x1.hi, osc1, rule)
    x2, w2 = gauss_nodes(domain.x2.lo, domain.x2.hi, osc2, rule)
    X1, X2 = np.meshgrid(x1, x2, indexing="ij")
    return float(w1 @ sample_integrand(g, X1, X2) @ w2)


def project_1d(values, x, w, kind: SeriesKind1D, lo: float, hi: float, M: int) -> TrigSeries1D:
    """Fourier coefficients from integrand samples at quadrature nodes.

    ``values`` may carry extra leading axes (one series per row); the
    stacked coefficients are returned in that case instead of a series.
    """
    unit = wave_unit(kind, lo, hi)
    B = trig_design(kind, unit, M, 0, x, weighted=False)
    coef = (2.0 / (hi - lo)) * (np.asarray(values) * w) @ B
    if coef.ndim > 1:
        return coef
    return TrigSeries1D.from_stacked(kind, unit, M, coef)


def fourier_coefficients_1d(g, kind: SeriesKind1D, domain: Domain1D, M: int,
                            rule: QuadratureRule = DEFAULT_RULE) -> TrigSeries1D:
    """Coefficients ``(2/|I|) * integral of g * trig`` for modes ``m = 0..M``.

    With the ``mu_m`` weights of :mod:`cfsm.trig` the truncated series
    reproduces any trigonometric polynomial of degree ``<= M`` exactly.
    """
    if M < 0:
        raise ValueError("M must be nonnegative")
    check_kind_1d(kind, domain)
    x, w = gauss_nodes(domain.lo, domain.hi, M, rule)
    return project_1d(sample_integrand(g, x), x, w, kind, domain.lo, domain.hi, M)


def project_2d(values, grid, kind, domain: Domain2D, M: int, N: int) -> TrigSeries2D:
    """Tensor-product coefficients from samples at the ``grid`` nodes.

    ``kind`` is a :class:`SeriesKind2D` or a pair of per-axis 1D kinds.
    """
    (x1, w1), (x2, w2) = grid
    k1, k2 = axis_kinds(kind) if isinstance(kind, SeriesKind2D) else kind
    u1 = wave_unit(k1, domain.x1.lo, domain.x1.hi)
    u2 = wave_unit(k2, domain.x2.lo, domain.x2.hi)
    B1 = trig_design(k1, u1, M, 0, x1, weighted=False) * w1[:, None]
    B2 = trig_design(k2, u2, N, 0, x2, weighted=False) * w2[:, None]
    norm = 4.0 / (domain.x1.length * domain.x2.length)
    coef = norm * (B1.T @ values @ B2)
    # sine blocks carry an unused m = 0 / n = 0 slot
    for axis, kind1d, n in ((0, k1, M), (1, k2, N)):
        if kind1d is not SeriesKind1D.HALF_COSINE:
            start = n + 1 if kind1d is SeriesKind1D.FULL_RANGE else 0
            if axis == 0:
                coef[start, :] = 0.0
            else:
                coef[:, start] = 0.0
    return TrigSeries2D((k1, k2), (u1, u2), M, N, coef)


def tensor_nodes(domain: Domain2D, M: int, N: int, rule: QuadratureRule = DEFAULT_RULE):
    return (gauss_nodes(domain.x1.lo, domain.x1.hi, M, rule),
            gauss_nodes(domain.x2.lo, domain.x2.hi, N, rule))


def fourier_coefficients_2d(g, kind: SeriesKind2D, domain: Domain2D, M: int, N: int,
                            rule: QuadratureRule = DEFAULT_RULE) -> TrigSeries2D:
    """Tensor-product Fourier coefficients ``(4/|D|) * integral of g * trig * trig``."""
    if M < 0 or N < 0:
        raise ValueError("M and N must be nonnegative")
    check_kind_2d(kind, domain)
    grid = tensor_nodes(domain, M, N, rule)
    X1, X2 = np.meshgrid(grid[0][0], grid[1][0], indexing="ij")
    return project_2d(sample_integrand(g, X1, X2), grid, kind, domain, M, N)
