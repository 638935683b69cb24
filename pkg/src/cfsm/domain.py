"""Value types shared by the whole package: domains, series kinds,
multi-indices and the user-facing function interface.

Derivative callbacks are expected to be numpy-vectorised: ``deriv(k, x)``
must accept an array ``x`` and return an array of the same shape (a scalar
return value is broadcast).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import OrderOutOfRange, UnsupportedKind


class DomainKind(enum.Enum):
    SYMMETRIC = "symmetric"      # [-a, a]
    NONNEGATIVE = "nonnegative"  # [0, a]


class SeriesKind1D(enum.Enum):
    FULL_RANGE = "full"
    HALF_COSINE = "cos"
    HALF_SINE = "sin"


class SeriesKind2D(enum.Enum):
    FULL_RANGE = "full"
    COS_COS = "coscos"
    SIN_COS = "sincos"
    COS_SIN = "cossin"
    SIN_SIN = "sinsin"


#: 2D kinds that have supplementary families and can be built.
SUPPORTED_2D = (SeriesKind2D.FULL_RANGE, SeriesKind2D.SIN_SIN)


class MultiIndex(NamedTuple):
    k1: int
    k2: int


def check_order(r: int) -> int:
    """Validate the smoothness order ``r`` (the maximum derivative is ``2r``)."""
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or r < 1:
        raise ValueError(f"smoothness order r must be a positive integer, got {r!r}")
    return int(r)


def check_derivative_order(k: int, r: int) -> None:
    if k < 0 or k > 2 * r:
        raise OrderOutOfRange(f"derivative order {k} outside 0..{2 * r}")


def check_multi_order(k1: int, k2: int, r: int) -> None:
    if k1 < 0 or k2 < 0 or k1 + k2 > 2 * r:
        raise OrderOutOfRange(f"derivative order ({k1}, {k2}) not within k1 + k2 <= {2 * r}")


@dataclass(frozen=True)
class Domain1D:
    kind: DomainKind
    a: float

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"domain half-width/length must be positive, got {self.a}")

    @property
    def lo(self) -> float:
        return -self.a if self.kind is DomainKind.SYMMETRIC else 0.0

    @property
    def hi(self) -> float:
        return self.a

    @property
    def length(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class Domain2D:
    kind: DomainKind
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise ValueError(f"domain extents must be positive, got a={self.a}, b={self.b}")

    @property
    def x1(self) -> Domain1D:
        return Domain1D(self.kind, self.a)

    @property
    def x2(self) -> Domain1D:
        return Domain1D(self.kind, self.b)


def check_kind_1d(kind: SeriesKind1D, domain: Domain1D) -> None:
    want = DomainKind.SYMMETRIC if kind is SeriesKind1D.FULL_RANGE else DomainKind.NONNEGATIVE
    if domain.kind is not want:
        raise ValueError(f"{kind.name} series needs a {want.value} domain, got {domain.kind.value}")


def check_kind_2d(kind: SeriesKind2D, domain: Domain2D) -> None:
    """Validate kind/domain pairing; raise :class:`UnsupportedKind` for the
    three half-range kinds without supplementary families."""
    want = DomainKind.SYMMETRIC if kind is SeriesKind2D.FULL_RANGE else DomainKind.NONNEGATIVE
    if domain.kind is not want:
        raise ValueError(f"{kind.name} series needs a {want.value} domain, got {domain.kind.value}")
    if kind not in SUPPORTED_2D:
        raise UnsupportedKind(f"{kind.name} composite series are not supported")


def axis_kinds(kind: SeriesKind2D) -> tuple[SeriesKind1D, SeriesKind1D]:
    """One-dimensional series kind along x1 and x2 for a 2D kind."""
    table = {
        SeriesKind2D.FULL_RANGE: (SeriesKind1D.FULL_RANGE, SeriesKind1D.FULL_RANGE),
        SeriesKind2D.SIN_SIN: (SeriesKind1D.HALF_SINE, SeriesKind1D.HALF_SINE),
    }
    try:
        return table[kind]
    except KeyError:
        raise UnsupportedKind(f"{kind.name} composite series are not supported") from None


@dataclass(frozen=True)
class FunctionSpec1D:
    """A function on a 1D domain with analytic derivatives.

    ``deriv(k, x)`` returns the k-th derivative at ``x``.
    """
    domain: Domain1D
    deriv: Callable[[int, np.ndarray], np.ndarray]

    def __call__(self, k: int, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.broadcast_to(np.asarray(self.deriv(k, x), dtype=float), x.shape)


@dataclass(frozen=True)
class FunctionSpec2D:
    """A function on a 2D domain with analytic partial derivatives.

    ``deriv(k1, k2, x1, x2)`` returns the ``(k1, k2)`` partial derivative.
    """
    domain: Domain2D
    deriv: Callable[[int, int, np.ndarray, np.ndarray], np.ndarray]

    def __call__(self, k1: int, k2: int, x1, x2) -> np.ndarray:
        x1, x2 = np.broadcast_arrays(np.asarray(x1, dtype=float), np.asarray(x2, dtype=float))
        return np.broadcast_to(np.asarray(self.deriv(k1, k2, x1, x2), dtype=float), x1.shape)


def enumerate_graded(max_total: int) -> list[MultiIndex]:
    """All ``(k1, k2)`` with ``k1 + k2 <= max_total``.

    Ordered by ascending total order, then by descending ``k1`` within a
    total order: ``(0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...``.
    """
    if max_total < 0:
        raise ValueError("max_total must be nonnegative")
    return [MultiIndex(g - k2, k2) for g in range(max_total + 1) for k2 in range(g + 1)]


def enumerate_sinsin_corner_set(r: int) -> list[MultiIndex]:
    """Exponent set of the sine-sine corner monomials ``(x1/a)^j (x2/b)^l``.

    Every pair with ``j + l <= 2r - 1`` plus the odd-odd pairs on the
    diagonal ``j + l = 2r``. For ``r <= 3`` this is the tabulated set (its
    extra members are ``(1, 3), (3, 1)`` for ``r = 2`` and ``(1, 5), (5, 1),
    (3, 3)`` for ``r = 3``); taking the odd-odd diagonal keeps the corner
    system nonsingular for larger ``r`` too. Size ``2r(r + 1)``, the number
    of even-even corner constraints.
    """
    r = check_order(r)
    out = enumerate_graded(2 * r - 1)
    out += [MultiIndex(j, 2 * r - j) for j in range(2 * r - 1, 0, -2)]
    return out


def finite_difference_mismatch(spec, max_order: int, points, h: float | None = None) -> float:
    """Largest relative mismatch between each derivative callback and the
    central difference of the next lower order.

    Works for :class:`FunctionSpec1D` (``points`` an array of x) and
    :class:`FunctionSpec2D` (``points`` a pair of arrays). Both partial
    directions are checked in 2D. The mismatch is scaled by
    ``max(1, max|exact|)`` over the probe points.
    """
    worst = 0.0
    if isinstance(spec, FunctionSpec1D):
        x = np.asarray(points, dtype=float)
        h = 1e-4 * spec.domain.a if h is None else h
        for k in range(1, max_order + 1):
            fd = (spec(k - 1, x + h) - spec(k - 1, x - h)) / (2 * h)
            exact = spec(k, x)
            worst = max(worst, float(np.max(np.abs(fd - exact)) / max(1.0, np.max(np.abs(exact)))))
        return worst
    x1, x2 = (np.asarray(p, dtype=float) for p in points)
    h = 1e-4 * min(spec.domain.a, spec.domain.b) if h is None else h
    for k1, k2 in enumerate_graded(max_order):
        steps = []
        if k1 > 0:
            steps.append((k1 - 1, k2, h, 0.0))
        if k2 > 0:
            steps.append((k1, k2 - 1, 0.0, h))
        exact = spec(k1, k2, x1, x2)
        scale = max(1.0, float(np.max(np.abs(exact))))
        for j1, j2, h1, h2 in steps:
            fd = (spec(j1, j2, x1 + h1, x2 + h2) - spec(j1, j2, x1 - h1, x2 - h2)) / (2 * h)
            worst = max(worst, float(np.max(np.abs(fd - exact))) / scale)
    return worst
