"""Truncated trigonometric series and their termwise derivatives.

A 1D series of kind ``kind`` on an interval of length ``L`` uses the
wavenumbers ``alpha_m = m * pi / a`` (``a`` the half-width of a symmetric
interval, or the length of a nonnegative one), ``m = 0..M``:

* full range:   ``sum mu_m (C_m cos(alpha_m x) + S_m sin(alpha_m x))``
* half cosine:  ``sum mu_m C_m cos(alpha_m x)``
* half sine:    ``sum S_m sin(alpha_m x)``

with ``mu_0 = 1/2`` and ``mu_m = 1`` otherwise. Sine coefficients are
stored with an (always zero) ``m = 0`` slot so both blocks index by ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import SeriesKind1D


def has_cos(kind: SeriesKind1D) -> bool:
    return kind is not SeriesKind1D.HALF_SINE


def has_sin(kind: SeriesKind1D) -> bool:
    return kind is not SeriesKind1D.HALF_COSINE


def cos_derivative(k: int, alpha, x) -> np.ndarray:
    """``d^k/dx^k cos(alpha x)`` as an array of shape ``x.shape + alpha.shape``."""
    t = np.multiply.outer(np.asarray(x, dtype=float), alpha)
    r = k % 4
    v = (np.cos(t), -np.sin(t), -np.cos(t), np.sin(t))[r]
    return np.asarray(alpha, dtype=float) ** k * v


def sin_derivative(k: int, alpha, x) -> np.ndarray:
    """``d^k/dx^k sin(alpha x)`` as an array of shape ``x.shape + alpha.shape``."""
    t = np.multiply.outer(np.asarray(x, dtype=float), alpha)
    r = k % 4
    v = (np.sin(t), np.cos(t), -np.sin(t), -np.cos(t))[r]
    return np.asarray(alpha, dtype=float) ** k * v


def mode_weights(M: int) -> np.ndarray:
    mu = np.ones(M + 1)
    mu[0] = 0.5
    return mu


def trig_design(kind: SeriesKind1D, unit: float, M: int, k: int, x, weighted: bool = True) -> np.ndarray:
    """Design matrix of the k-th derivative of the series basis at ``x``.

    Columns are the cosine block ``m = 0..M`` (if the kind has one) followed
    by the sine block ``m = 0..M``. With ``weighted`` the ``mu_m`` factors
    are applied to the cosine block.
    """
    alpha = unit * np.arange(M + 1)
    blocks = []
    if has_cos(kind):
        c = cos_derivative(k, alpha, x)
        blocks.append(c * mode_weights(M) if weighted else c)
    if has_sin(kind):
        blocks.append(sin_derivative(k, alpha, x))
    return np.concatenate(blocks, axis=-1)


def wave_unit(kind: SeriesKind1D, lo: float, hi: float) -> float:
    """``pi / a``: full range on ``[-a, a]`` and half range on ``[0, a]``."""
    return 2 * np.pi / (hi - lo) if kind is SeriesKind1D.FULL_RANGE else np.pi / (hi - lo)


@dataclass(frozen=True)
class TrigSeries1D:
    """A truncated 1D series; see module docstring for the convention."""
    kind: SeriesKind1D
    unit: float
    M: int
    cos: np.ndarray | None
    sin: np.ndarray | None

    @property
    def stacked(self) -> np.ndarray:
        return np.concatenate([c for c in (self.cos, self.sin) if c is not None])

    def evaluate(self, k: int, x) -> np.ndarray:
        return trig_design(self.kind, self.unit, self.M, k, x) @ self.stacked

    @classmethod
    def zeros(cls, kind, unit, M):
        return cls(kind, unit, M,
                   np.zeros(M + 1) if has_cos(kind) else None,
                   np.zeros(M + 1) if has_sin(kind) else None)

    @classmethod
    def from_stacked(cls, kind, unit, M, coef):
        coef = np.asarray(coef, dtype=float)
        parts = iter(np.split(coef, int(has_cos(kind)) + int(has_sin(kind))))
        c = next(parts) if has_cos(kind) else None
        s = next(parts) if has_sin(kind) else None
        if s is not None:
            s = s.copy()
            s[0] = 0.0
        return cls(kind, unit, M, c, s)


@dataclass(frozen=True)
class TrigSeries2D:
    """A truncated tensor-product series on a rectangle.

    ``coef`` is a block matrix whose row blocks follow the x1 design columns
    (cosine then sine) and column blocks the x2 design columns. For the
    full-range kind the blocks are ``[[V1, V3], [V2, V4]]`` (cos-cos,
    cos-sin / sin-cos, sin-sin), each ``(M+1) x (N+1)``; weights
    ``lambda_mn = mu_m mu_n`` come from the weighted designs.
    """
    kinds: tuple[SeriesKind1D, SeriesKind1D]
    units: tuple[float, float]
    M: int
    N: int
    coef: np.ndarray

    def block(self, part1: str, part2: str) -> np.ndarray:
        """Sub-array for ``part1``/``part2`` in ``{"cos", "sin"}``."""
        def offset(kind, part, n):
            if part == "cos":
                if not has_cos(kind):
                    raise KeyError(f"{kind.name} has no cosine block")
                return 0
            if not has_sin(kind):
                raise KeyError(f"{kind.name} has no sine block")
            return n + 1 if has_cos(kind) else 0
        i = offset(self.kinds[0], part1, self.M)
        j = offset(self.kinds[1], part2, self.N)
        return self.coef[i:i + self.M + 1, j:j + self.N + 1]

    def evaluate_grid(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        D1 = trig_design(self.kinds[0], self.units[0], self.M, k1, x1)
        D2 = trig_design(self.kinds[1], self.units[1], self.N, k2, x2)
        return D1 @ self.coef @ D2.T

    def evaluate(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        x1, x2 = np.broadcast_arrays(np.asarray(x1, float), np.asarray(x2, float))
        D1 = trig_design(self.kinds[0], self.units[0], self.M, k1, x1.ravel())
        D2 = trig_design(self.kinds[1], self.units[1], self.N, k2, x2.ravel())
        return np.einsum("pi,ij,pj->p", D1, self.coef, D2).reshape(x1.shape)
