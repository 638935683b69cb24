"""Supplementary functions, constraint systems and basis operators.

A supplementary family is a short list of smooth closed-form functions with
exact derivatives. Its coefficients are fixed by linear constraints on
endpoint (1D) or corner (2D) derivative values. Each constraint row is a
signed sum of point evaluations of one derivative. The same rows build both
the matrix ``R`` (applied to the family) and the right-hand side ``q``
(applied to the target function). That keeps the two consistent by
construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import perm
from typing import Callable, Sequence

import numpy as np

from .domain import (
    MultiIndex,
    SeriesKind1D,
    SeriesKind2D,
    check_order,
    enumerate_graded,
    enumerate_sinsin_corner_set,
)
from .errors import UnsupportedKind
from .linalg import LUFactor

#: corner sequence for 2D constraint rows: (a, b), (a, lo_b), (lo_a, b), (lo_a, lo_b)
CORNER_SIGNS = (1.0, -1.0, -1.0, 1.0)


@dataclass(frozen=True)
class SupplementaryFamily:
    """Ordered list of supplementary functions.

    ``eval(j, k, *point)`` gives the k-th derivative of member ``j``; ``k``
    is an int for 1D families and a ``(k1, k2)`` pair for 2D ones.
    """
    size: int
    eval: Callable
    label: str
    exponents: tuple = field(default=(), compare=False)

    def values(self, k, *points) -> np.ndarray:
        """All members at once, shape ``points.shape + (size,)``."""
        pts = np.broadcast_arrays(*(np.asarray(p, dtype=float) for p in points))
        return np.stack([np.broadcast_to(self.eval(j, k, *pts), pts[0].shape)
                         for j in range(self.size)], axis=-1)

    def combine(self, coef, k, *points) -> np.ndarray:
        """``sum_j coef[j] * member_j^(k)``; avoids materialising :meth:`values`."""
        pts = np.broadcast_arrays(*(np.asarray(p, dtype=float) for p in points))
        out = np.zeros(pts[0].shape)
        for j, c in enumerate(coef):
            if c != 0.0:
                out += c * self.eval(j, k, *pts)
        return out


def _monomial(e: int, k: int, x, scale: float):
    if k > e:
        return np.zeros_like(x)
    return perm(e, k) * x ** (e - k) / scale ** e


def monomial_family_1d(exponents: Sequence[int], scale: float, label: str) -> SupplementaryFamily:
    exps = tuple(int(e) for e in exponents)

    def ev(j, k, x):
        return _monomial(exps[j], k, np.asarray(x, dtype=float), scale)

    return SupplementaryFamily(len(exps), ev, label, exps)


def monomial_family_2d(exponents: Sequence[tuple[int, int]], a: float, b: float,
                       label: str) -> SupplementaryFamily:
    exps = tuple((int(e1), int(e2)) for e1, e2 in exponents)

    def ev(j, k, x1, x2):
        e1, e2 = exps[j]
        k1, k2 = k
        return _monomial(e1, k1, np.asarray(x1, float), a) * _monomial(e2, k2, np.asarray(x2, float), b)

    return SupplementaryFamily(len(exps), ev, label, exps)


def polynomial_family_1d(kind: SeriesKind1D, r: int, a: float) -> SupplementaryFamily:
    """``(x/a)^j, j = 1..2r`` for full-range and half-cosine series;
    ``(x/a)^(j-1)`` for half-sine series."""
    r = check_order(r)
    if kind is SeriesKind1D.HALF_SINE:
        return monomial_family_1d(range(0, 2 * r), a, "(x/a)^(j-1), j=1..2r")
    return monomial_family_1d(range(1, 2 * r + 1), a, "(x/a)^j, j=1..2r")


def full_range_corner_exponents(r: int) -> list[tuple[int, int]]:
    """Four blocks of exponent pairs: even-even, odd-even, even-odd, odd-odd."""
    low = enumerate_graded(r - 2) if r >= 2 else []
    top = enumerate_graded(r - 1)
    return ([(2 * j + 2, 2 * l + 2) for j, l in low]
            + [(2 * j + 1, 2 * l + 2) for j, l in low]
            + [(2 * j + 2, 2 * l + 1) for j, l in low]
            + [(2 * j + 1, 2 * l + 1) for j, l in top])


def polynomial_family_corner(kind: SeriesKind2D, r: int, a: float, b: float) -> SupplementaryFamily:
    r = check_order(r)
    if kind is SeriesKind2D.FULL_RANGE:
        return monomial_family_2d(full_range_corner_exponents(r), a, b, "full-range corner blocks")
    if kind is SeriesKind2D.SIN_SIN:
        return monomial_family_2d(enumerate_sinsin_corner_set(r), a, b, "sine-sine corner set")
    raise UnsupportedKind(f"no corner family for {kind.name}")


# -- constraint rows -------------------------------------------------------

@dataclass(frozen=True)
class ConstraintRow:
    """``sum(sign * f^(order)(point))`` over ``terms = ((point, sign), ...)``."""
    order: int | MultiIndex
    terms: tuple


def boundary_rows_1d(kind: SeriesKind1D, r: int, a: float) -> list[ConstraintRow]:
    """Endpoint constraints that make the internal function termwise
    differentiable ``2r`` times.

    Full range: jumps ``f^(k)(a) - f^(k)(-a)``, ``k = 0..2r-1``. Half
    cosine: odd orders ``1..2r-1`` at ``x = a`` then at ``x = 0``. Half sine:
    even orders ``0..2r-2`` at ``x = a`` then at ``x = 0``.
    """
    r = check_order(r)
    if kind is SeriesKind1D.FULL_RANGE:
        return [ConstraintRow(k, ((a, 1.0), (-a, -1.0))) for k in range(2 * r)]
    orders = range(1, 2 * r, 2) if kind is SeriesKind1D.HALF_COSINE else range(0, 2 * r - 1, 2)
    return ([ConstraintRow(k, ((a, 1.0),)) for k in orders]
            + [ConstraintRow(k, ((0.0, 1.0),)) for k in orders])


def corner_points(kind: SeriesKind2D, a: float, b: float) -> list[tuple[float, float]]:
    if kind is SeriesKind2D.FULL_RANGE:
        return [(a, b), (a, -b), (-a, b), (-a, -b)]
    return [(a, b), (a, 0.0), (0.0, b), (0.0, 0.0)]


def corner_rows(kind: SeriesKind2D, r: int, a: float, b: float) -> list[ConstraintRow]:
    """Corner constraints.

    Full range: four-corner alternating sums for every ``(k1, k2)`` with
    ``k1 + k2 <= 2r - 2`` (graded order). Sine-sine: single-corner values
    of even-even orders with ``k1 + k2 <= 2r - 2``, corner-major.
    """
    r = check_order(r)
    pts = corner_points(kind, a, b)
    if kind is SeriesKind2D.FULL_RANGE:
        terms = tuple(zip(pts, CORNER_SIGNS))
        return [ConstraintRow(idx, terms) for idx in enumerate_graded(2 * r - 2)]
    if kind is SeriesKind2D.SIN_SIN:
        even = [idx for idx in enumerate_graded(2 * r - 2) if idx.k1 % 2 == 0 and idx.k2 % 2 == 0]
        return [ConstraintRow(idx, ((p, 1.0),)) for p in pts for idx in even]
    raise UnsupportedKind(f"no corner constraints for {kind.name}")


def _as_args(order, point):
    return (order, point) if np.ndim(point) == 0 else (order, *point)


def apply_rows_to_family(rows: Sequence[ConstraintRow], family: SupplementaryFamily) -> np.ndarray:
    R = np.zeros((len(rows), family.size))
    for i, row in enumerate(rows):
        for point, sign in row.terms:
            R[i] += sign * family.values(*_as_args(row.order, point))
    return R


def apply_rows_to_function(rows: Sequence[ConstraintRow], f) -> np.ndarray:
    """Right-hand side ``q`` for a :class:`FunctionSpec1D`/``2D``."""
    q = np.zeros(len(rows))
    for i, row in enumerate(rows):
        for point, sign in row.terms:
            if np.ndim(point) == 0:
                q[i] += sign * float(f(row.order, point))
            else:
                q[i] += sign * float(f(row.order[0], row.order[1], *point))
    return q


def build_boundary_matrix_1d(family: SupplementaryFamily, kind: SeriesKind1D, r: int, a: float) -> np.ndarray:
    if family.size != 2 * r:
        raise ValueError(f"family has {family.size} members, expected {2 * r}")
    return apply_rows_to_family(boundary_rows_1d(kind, r, a), family)


def build_corner_matrix(family: SupplementaryFamily, kind: SeriesKind2D, r: int, a: float, b: float) -> np.ndarray:
    rows = corner_rows(kind, r, a, b)
    if family.size != len(rows):
        raise ValueError(f"family has {family.size} members, expected {len(rows)}")
    return apply_rows_to_family(rows, family)


@dataclass(frozen=True)
class BasisOperator:
    """Lazy ``Phi^T = p^T R^{-1}``: a family together with its factored ``R``."""
    family: SupplementaryFamily
    factor: LUFactor

    @property
    def R_condition(self) -> float:
        return self.factor.condition_estimate

    @property
    def size(self) -> int:
        return self.family.size

    def basis(self, k, *points) -> np.ndarray:
        """``Phi^(k)`` at the points, shape ``points.shape + (size,)``."""
        P = self.family.values(k, *points)
        flat = P.reshape(-1, self.size)
        out = self.factor.solve_columns(flat.T, trans=True).T
        return out.reshape(P.shape)

    def coefficients(self, q) -> np.ndarray:
        """Supplementary coefficients ``a = R^{-1} q``."""
        return self.factor.solve(q)

    def coefficients_many(self, Q) -> np.ndarray:
        return self.factor.solve_columns(Q)

    def evaluate(self, q, k, *points) -> np.ndarray:
        """``Phi^(k)(x) . q`` evaluated as ``p^(k)(x) . (R^{-1} q)``."""
        return self.family.combine(self.coefficients(q), k, *points)


def basis_operator(family: SupplementaryFamily, R) -> BasisOperator:
    R = np.asarray(R, dtype=float)
    if R.shape != (family.size, family.size):
        raise ValueError(f"R has shape {R.shape}, family has {family.size} members")
    return BasisOperator(family, LUFactor(R))


def default_basis_1d(kind: SeriesKind1D, r: int, a: float) -> BasisOperator:
    fam = polynomial_family_1d(kind, r, a)
    return basis_operator(fam, build_boundary_matrix_1d(fam, kind, r, a))


def default_corner_basis(kind: SeriesKind2D, r: int, a: float, b: float) -> BasisOperator:
    fam = polynomial_family_corner(kind, r, a, b)
    return basis_operator(fam, build_corner_matrix(fam, kind, r, a, b))
