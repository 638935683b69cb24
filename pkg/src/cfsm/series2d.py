"""Two-dimensional composite Fourier series.

``u = phi0 + phi1 + phi2 + phi3`` on a rectangle:

* ``phi3`` (corner function) is a polynomial that absorbs the corner data;
* ``phi1`` is a 1D series along x2 whose mode coefficients are polynomials in
  x1, absorbing the traces of ``u - phi3`` on the edges ``x1 = const``;
* ``phi2`` is the same with the axes swapped;
* ``phi0`` is the remaining internal function, expanded in a 2D series.

Construction order is ``phi3 -> phi1 -> phi2 -> phi0``. The full-range and
sine-sine kinds are supported.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import (
    BasisOperator,
    ConstraintRow,
    apply_rows_to_function,
    boundary_rows_1d,
    corner_rows,
    default_basis_1d,
    default_corner_basis,
)
from .domain import (
    Domain2D,
    FunctionSpec2D,
    SeriesKind1D,
    SeriesKind2D,
    axis_kinds,
    check_kind_2d,
    check_multi_order,
    check_order,
)
from .errors import NonFiniteIntegrand
from .quadrature import DEFAULT_RULE, QuadratureRule, gauss_nodes, project_1d, project_2d, tensor_nodes
from .trig import TrigSeries2D, has_cos, has_sin, trig_design, wave_unit


def corner_data(f: FunctionSpec2D, kind: SeriesKind2D, r: int) -> np.ndarray:
    """Corner data ``q3``.

    Full range: four-corner alternating sums of ``u^(k1,k2)`` for
    ``k1 + k2 <= 2r - 2`` in graded order. Sine-sine: even-even corner values,
    corner-major in the order ``(a,b), (a,0), (0,b), (0,0)``.
    """
    r = check_order(r)
    check_kind_2d(kind, f.domain)
    return apply_rows_to_function(corner_rows(kind, r, f.domain.a, f.domain.b), f)


@dataclass(frozen=True)
class EdgeCoefficientTable:
    """Boundary Fourier coefficients of one edge pair.

    ``q_cos[:, n]`` / ``q_sin[:, n]`` hold the constraint vector for mode
    ``n`` of the cosine / sine part (``None`` if the mode kind lacks that
    part; the sine ``n = 0`` column is zero). ``a_cos``/``a_sin`` are the
    solved supplementary coefficients ``R^{-1} q``.
    """
    axis: int
    mode_kind: SeriesKind1D
    modes: int
    q_cos: np.ndarray | None
    q_sin: np.ndarray | None
    a_cos: np.ndarray | None
    a_sin: np.ndarray | None

    @property
    def q_stacked(self) -> np.ndarray:
        return np.concatenate([q for q in (self.q_cos, self.q_sin) if q is not None], axis=1)

    @property
    def a_stacked(self) -> np.ndarray:
        return np.concatenate([a for a in (self.a_cos, self.a_sin) if a is not None], axis=1)


@dataclass(frozen=True)
class EdgeFunction:
    """``phi1`` (``axis=0``: polynomial in x1, modes in x2) or ``phi2``
    (``axis=1``: polynomial in x2, modes in x1)."""
    basis: BasisOperator
    table: EdgeCoefficientTable
    unit: float

    @property
    def axis(self) -> int:
        return self.table.axis

    def _factors(self, k_poly, k_mode, xp, xm):
        P = self.basis.family.values(k_poly, xp)
        T = trig_design(self.table.mode_kind, self.unit, self.table.modes, k_mode, xm)
        return P @ self.table.a_stacked, T

    def evaluate(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        x1, x2 = np.broadcast_arrays(np.asarray(x1, float), np.asarray(x2, float))
        if self.axis == 0:
            A, T = self._factors(k1, k2, x1.ravel(), x2.ravel())
        else:
            A, T = self._factors(k2, k1, x2.ravel(), x1.ravel())
        return np.sum(A * T, axis=-1).reshape(x1.shape)

    def evaluate_grid(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        if self.axis == 0:
            A, T = self._factors(k1, k2, np.asarray(x1, float), np.asarray(x2, float))
            return A @ T.T
        A, T = self._factors(k2, k1, np.asarray(x2, float), np.asarray(x1, float))
        return T @ A.T


def _edge_rows(kind1d: SeriesKind1D, r: int, extent: float) -> list[ConstraintRow]:
    return boundary_rows_1d(kind1d, r, extent)


def edge_coefficients(f: FunctionSpec2D, phi3, kind: SeriesKind2D, r: int, edge_axis: int,
                      modes: int, rule: QuadratureRule = DEFAULT_RULE,
                      basis: BasisOperator | None = None) -> EdgeCoefficientTable:
    """Boundary Fourier coefficients of ``u - phi3`` on one pair of edges.

    ``edge_axis = 0`` treats the edges ``x1 = const`` (for ``phi1``): each
    constraint row on x1 is applied to the trace ``(u - phi3)^(k1,0)`` and
    the result is expanded along x2 in modes ``0..modes``. ``edge_axis = 1``
    is the mirror for ``phi2``. ``phi3(k1, k2, x1, x2)`` evaluates the corner
    function. If ``basis`` is given the coefficients are also solved.
    """
    r = check_order(r)
    check_kind_2d(kind, f.domain)
    if modes < 0:
        raise ValueError("modes must be nonnegative")
    kinds = axis_kinds(kind)
    dom = f.domain
    poly_dom, mode_dom = (dom.x1, dom.x2) if edge_axis == 0 else (dom.x2, dom.x1)
    poly_kind, mode_kind = kinds[edge_axis], kinds[1 - edge_axis]
    rows = _edge_rows(poly_kind, r, poly_dom.a)
    xm, wm = gauss_nodes(mode_dom.lo, mode_dom.hi, modes, rule)

    traces = np.zeros((len(rows), xm.size))
    for i, row in enumerate(rows):
        for xp, sign in row.terms:
            xp = np.full_like(xm, xp)
            if edge_axis == 0:
                traces[i] += sign * (f(row.order, 0, xp, xm) - phi3(row.order, 0, xp, xm))
            else:
                traces[i] += sign * (f(0, row.order, xm, xp) - phi3(0, row.order, xm, xp))
    Q = project_1d(traces, xm, wm, mode_kind, mode_dom.lo, mode_dom.hi, modes)
    q_cos = q_sin = None
    if has_cos(mode_kind) and has_sin(mode_kind):
        q_cos, q_sin = Q[:, :modes + 1], Q[:, modes + 1:].copy()
    elif has_cos(mode_kind):
        q_cos = Q
    else:
        q_sin = Q.copy()
    if q_sin is not None:
        q_sin[:, 0] = 0.0
    a_cos = a_sin = None
    if basis is not None:
        a_cos = None if q_cos is None else basis.coefficients_many(q_cos)
        a_sin = None if q_sin is None else basis.coefficients_many(q_sin)
    return EdgeCoefficientTable(edge_axis, mode_kind, modes, q_cos, q_sin, a_cos, a_sin)


@dataclass(frozen=True)
class CompositeSeries2D:
    r: int
    kind: SeriesKind2D
    domain: Domain2D
    corner_basis: BasisOperator
    q3: np.ndarray
    edge1: EdgeFunction
    edge2: EdgeFunction
    q0: TrigSeries2D
    M: int
    N: int

    def __post_init__(self):
        object.__setattr__(self, "_a3", self.corner_basis.coefficients(self.q3))

    @property
    def a3(self) -> np.ndarray:
        return self._a3

    @property
    def q1(self) -> EdgeCoefficientTable:
        return self.edge1.table

    @property
    def q2(self) -> EdgeCoefficientTable:
        return self.edge2.table

    def corner_part(self, k1, k2, x1, x2) -> np.ndarray:
        check_multi_order(k1, k2, self.r)
        return self.corner_basis.family.combine(self._a3, (k1, k2), x1, x2)

    def edge_part(self, which: int, k1, k2, x1, x2) -> np.ndarray:
        """``phi1`` (``which=1``) or ``phi2`` (``which=2``)."""
        check_multi_order(k1, k2, self.r)
        return (self.edge1 if which == 1 else self.edge2).evaluate(k1, k2, x1, x2)

    def internal_part(self, k1, k2, x1, x2) -> np.ndarray:
        check_multi_order(k1, k2, self.r)
        return self.q0.evaluate(k1, k2, x1, x2)

    def evaluate(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        """``u^(k1,k2)`` from the truncated composite series (pointwise, broadcast)."""
        return (self.internal_part(k1, k2, x1, x2) + self.edge_part(1, k1, k2, x1, x2)
                + self.edge_part(2, k1, k2, x1, x2) + self.corner_part(k1, k2, x1, x2))

    def evaluate_grid(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        """``u^(k1,k2)`` on the tensor grid ``x1 x x2``, shape ``(len(x1), len(x2))``."""
        check_multi_order(k1, k2, self.r)
        X1, X2 = np.meshgrid(x1, x2, indexing="ij")
        return (self.q0.evaluate_grid(k1, k2, x1, x2) + self.edge1.evaluate_grid(k1, k2, x1, x2)
                + self.edge2.evaluate_grid(k1, k2, x1, x2)
                + self.corner_basis.family.combine(self._a3, (k1, k2), X1, X2))

    def polynomial_part(self, k1, k2, x1, x2) -> np.ndarray:
        """Sum of the algebraic-polynomial basis terms only: the corner
        function, the mode-0 terms of full-range edge series, and the
        constant internal term."""
        check_multi_order(k1, k2, self.r)
        out = self.corner_part(k1, k2, x1, x2)
        for edge in (self.edge1, self.edge2):
            t = edge.table
            if t.a_cos is not None:
                k_poly, k_mode = (k1, k2) if edge.axis == 0 else (k2, k1)
                if k_mode == 0:
                    xp = x1 if edge.axis == 0 else x2
                    out = out + 0.5 * edge.basis.family.combine(t.a_cos[:, 0], k_poly, xp)
        kinds = self.q0.kinds
        if has_cos(kinds[0]) and has_cos(kinds[1]) and k1 == 0 and k2 == 0:
            out = out + 0.25 * self.q0.coef[0, 0]
        return np.broadcast_to(out, np.broadcast_shapes(np.shape(x1), np.shape(x2)))

    def __call__(self, k1, k2, x1, x2):
        return self.evaluate(k1, k2, x1, x2)


def build_composite_2d(f: FunctionSpec2D, kind: SeriesKind2D, r: int, M: int, N: int,
                       rule: QuadratureRule = DEFAULT_RULE) -> CompositeSeries2D:
    """Construct the composite series of ``f`` truncated at modes ``M`` (x1) and ``N`` (x2)."""
    r = check_order(r)
    check_kind_2d(kind, f.domain)
    if M < 0 or N < 0:
        raise ValueError("M and N must be nonnegative")
    dom = f.domain
    k1d, k2d = axis_kinds(kind)

    corner = default_corner_basis(kind, r, dom.a, dom.b)
    q3 = corner_data(f, kind, r)
    a3 = corner.coefficients(q3)

    def phi3(k1, k2, x1, x2):
        return corner.family.combine(a3, (k1, k2), x1, x2)

    basis1 = default_basis_1d(k1d, r, dom.a)
    basis2 = basis1 if (k2d, dom.b) == (k1d, dom.a) else default_basis_1d(k2d, r, dom.b)
    t1 = edge_coefficients(f, phi3, kind, r, 0, N, rule, basis=basis1)
    t2 = edge_coefficients(f, phi3, kind, r, 1, M, rule, basis=basis2)
    edge1 = EdgeFunction(basis1, t1, wave_unit(k2d, dom.x2.lo, dom.x2.hi))
    edge2 = EdgeFunction(basis2, t2, wave_unit(k1d, dom.x1.lo, dom.x1.hi))

    grid = tensor_nodes(dom, M, N, rule)
    x1, x2 = grid[0][0], grid[1][0]
    X1, X2 = np.meshgrid(x1, x2, indexing="ij")
    resid = (f(0, 0, X1, X2) - corner.family.combine(a3, (0, 0), X1, X2)
             - edge1.evaluate_grid(0, 0, x1, x2) - edge2.evaluate_grid(0, 0, x1, x2))
    if not np.all(np.isfinite(resid)):
        raise NonFiniteIntegrand("internal residual is not finite")
    q0 = project_2d(resid, grid, kind, dom, M, N)
    return CompositeSeries2D(r, kind, dom, corner, q3, edge1, edge2, q0, M, N)


def evaluate_2d(s: CompositeSeries2D, k1: int, k2: int, x1, x2) -> np.ndarray:
    return s.evaluate(k1, k2, x1, x2)
