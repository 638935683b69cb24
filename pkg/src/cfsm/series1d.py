"""One-dimensional composite Fourier series.

``u = phi0 + phi1``: the boundary function ``phi1`` is a supplementary
polynomial that carries the endpoint jumps of ``u`` and its derivatives up
to order ``2r - 1``; the internal function ``phi0 = u - phi1`` is then
expanded in a trigonometric series that may be differentiated term by term
``2r`` times.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import BasisOperator, apply_rows_to_function, boundary_rows_1d, default_basis_1d
from .domain import Domain1D, FunctionSpec1D, SeriesKind1D, check_derivative_order, check_kind_1d, check_order
from .quadrature import DEFAULT_RULE, QuadratureRule, fourier_coefficients_1d
from .trig import TrigSeries1D


def boundary_data_1d(f: FunctionSpec1D, kind: SeriesKind1D, r: int) -> np.ndarray:
    """Endpoint data ``q1`` of ``f`` for ``kind``.

    Full range: ``u^(k)(a) - u^(k)(-a)`` for ``k = 0..2r-1``. Half cosine:
    odd-order values at ``a`` then at ``0``. Half sine: even-order values at
    ``a`` then at ``0``.
    """
    r = check_order(r)
    check_kind_1d(kind, f.domain)
    return apply_rows_to_function(boundary_rows_1d(kind, r, f.domain.a), f)


@dataclass(frozen=True)
class CompositeSeries1D:
    r: int
    kind: SeriesKind1D
    domain: Domain1D
    basis: BasisOperator
    q1: np.ndarray
    q0: TrigSeries1D
    M: int

    def __post_init__(self):
        object.__setattr__(self, "_a1", self.basis.coefficients(self.q1))

    @property
    def a1(self) -> np.ndarray:
        """Coefficients of the supplementary polynomials, ``R^{-1} q1``."""
        return self._a1

    def boundary_part(self, k: int, x) -> np.ndarray:
        check_derivative_order(k, self.r)
        return self.basis.family.combine(self._a1, k, x)

    def internal_part(self, k: int, x) -> np.ndarray:
        check_derivative_order(k, self.r)
        return self.q0.evaluate(k, x)

    def evaluate(self, k: int, x) -> np.ndarray:
        """``u^(k)`` at ``x`` from the truncated composite series."""
        return self.internal_part(k, x) + self.boundary_part(k, x)

    def polynomial_part(self, k: int, x) -> np.ndarray:
        """Sum of the algebraic-polynomial basis terms only: the boundary
        function plus the constant internal term."""
        out = self.boundary_part(k, x)
        if self.q0.cos is not None and k == 0:
            out = out + 0.5 * self.q0.cos[0]
        return out

    def __call__(self, k: int, x) -> np.ndarray:
        return self.evaluate(k, x)


def build_composite_1d(f: FunctionSpec1D, kind: SeriesKind1D, r: int, M: int,
                       rule: QuadratureRule = DEFAULT_RULE,
                       basis: BasisOperator | None = None) -> CompositeSeries1D:
    """Construct the composite series of ``f`` truncated at mode ``M``.

    ``basis`` overrides the default polynomial family; it must be built on
    the same constraint rows.
    """
    r = check_order(r)
    if M < 0:
        raise ValueError("M must be nonnegative")
    check_kind_1d(kind, f.domain)
    if basis is None:
        basis = default_basis_1d(kind, r, f.domain.a)
    q1 = boundary_data_1d(f, kind, r)
    a1 = basis.coefficients(q1)

    def residual(x):
        return f(0, x) - basis.family.combine(a1, 0, x)

    q0 = fourier_coefficients_1d(residual, kind, f.domain, M, rule)
    return CompositeSeries1D(r, kind, f.domain, basis, q1, q0, M)


def evaluate_1d(s: CompositeSeries1D, k: int, x) -> np.ndarray:
    return s.evaluate(k, x)
