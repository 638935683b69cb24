"""The eight benchmark functions with exact derivatives of every order.

Samples 1-4 are one-dimensional, 5-8 two-dimensional. Polynomial samples
use ``P(t) = 1/2 - t - t^2/2 + t^3`` with ``t = x/a``; trigonometric ones use
``alpha0 = pi/(2a)`` and ``beta0 = pi/(2b)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .domain import (
    Domain1D,
    Domain2D,
    DomainKind,
    FunctionSpec1D,
    FunctionSpec2D,
    SeriesKind1D,
    SeriesKind2D,
)
from .errors import UnknownSample
from .trig import cos_derivative, sin_derivative

CUBIC = Polynomial([0.5, -1.0, -0.5, 1.0])

SAMPLE_IDS = tuple(range(1, 9))


@dataclass(frozen=True)
class SampleCase:
    id: int
    spec: FunctionSpec1D | FunctionSpec2D
    kind: SeriesKind1D | SeriesKind2D
    description: str

    @property
    def dim(self) -> int:
        return 1 if isinstance(self.spec, FunctionSpec1D) else 2

    @property
    def domain(self):
        return self.spec.domain


def cubic_derivative(k: int, x, scale: float) -> np.ndarray:
    return CUBIC.deriv(k)(np.asarray(x, dtype=float) / scale) / scale ** k


def _cubic_1d(domain):
    return FunctionSpec1D(domain, lambda k, x: cubic_derivative(k, x, domain.a))


def _sine_1d(domain):
    alpha0 = np.pi / (2 * domain.a)
    return FunctionSpec1D(domain, lambda k, x: sin_derivative(k, alpha0, x))


def _cosine_1d(domain):
    alpha0 = np.pi / (2 * domain.a)
    return FunctionSpec1D(domain, lambda k, x: cos_derivative(k, alpha0, x))


def _cubic_2d(domain):
    def deriv(k1, k2, x1, x2):
        return cubic_derivative(k1, x1, domain.a) * cubic_derivative(k2, x2, domain.b)
    return FunctionSpec2D(domain, deriv)


def _trig_2d(domain):
    alpha0 = np.pi / (2 * domain.a)
    beta0 = np.pi / (2 * domain.b)

    def deriv(k1, k2, x1, x2):
        return sin_derivative(k1, alpha0, x1) * cos_derivative(k2, beta0, x2)
    return FunctionSpec2D(domain, deriv)


def get_sample(id: int, a: float = 1.0, b: float = 1.0) -> SampleCase:
    """Sample ``id`` (1..8) on a domain of half-width/length ``a`` (and ``b``)."""
    sym1, non1 = Domain1D(DomainKind.SYMMETRIC, a), Domain1D(DomainKind.NONNEGATIVE, a)
    sym2, non2 = Domain2D(DomainKind.SYMMETRIC, a, b), Domain2D(DomainKind.NONNEGATIVE, a, b)
    if id == 1:
        return SampleCase(1, _cubic_1d(sym1), SeriesKind1D.FULL_RANGE, "cubic on [-a,a]")
    if id == 2:
        return SampleCase(2, _sine_1d(sym1), SeriesKind1D.FULL_RANGE, "sin(pi x/2a) on [-a,a]")
    if id == 3:
        return SampleCase(3, _cubic_1d(non1), SeriesKind1D.HALF_SINE, "cubic on [0,a]")
    if id == 4:
        return SampleCase(4, _cosine_1d(non1), SeriesKind1D.HALF_SINE, "cos(pi x/2a) on [0,a]")
    if id == 5:
        return SampleCase(5, _cubic_2d(sym2), SeriesKind2D.FULL_RANGE, "cubic x cubic on [-a,a]x[-b,b]")
    if id == 6:
        return SampleCase(6, _trig_2d(sym2), SeriesKind2D.FULL_RANGE,
                          "sin(pi x1/2a) cos(pi x2/2b) on [-a,a]x[-b,b]")
    if id == 7:
        return SampleCase(7, _cubic_2d(non2), SeriesKind2D.SIN_SIN, "cubic x cubic on [0,a]x[0,b]")
    if id == 8:
        return SampleCase(8, _trig_2d(non2), SeriesKind2D.SIN_SIN,
                          "sin(pi x1/2a) cos(pi x2/2b) on [0,a]x[0,b]")
    raise UnknownSample(f"no sample with id {id!r}; expected 1..8")
