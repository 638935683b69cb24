import sys
from math import perm

import numpy as np
import pytest

from cfsm.domain import Domain1D, Domain2D, DomainKind, FunctionSpec1D, FunctionSpec2D


def poly_spec_1d(domain: Domain1D, coef) -> FunctionSpec1D:
    """``sum coef[i] x^i`` with exact derivatives (power rule, no numpy.polynomial)."""
    coef = np.asarray(coef, float)

    def deriv(k, x):
        out = np.zeros_like(x)
        for i, c in enumerate(coef):
            if i >= k and c:
                out = out + c * perm(i, k) * x ** (i - k)
        return out
    return FunctionSpec1D(domain, deriv)


def poly_spec_2d(domain: Domain2D, C) -> FunctionSpec2D:
    """``sum C[i, j] x1^i x2^j`` with exact partial derivatives."""
    C = np.asarray(C, float)

    def deriv(k1, k2, x1, x2):
        out = np.zeros(np.broadcast_shapes(np.shape(x1), np.shape(x2)))
        for (i, j), c in np.ndenumerate(C):
            if c and i >= k1 and j >= k2:
                out = out + c * perm(i, k1) * perm(j, k2) * x1 ** (i - k1) * x2 ** (j - k2)
        return out
    return FunctionSpec2D(domain, deriv)


def random_complete_poly(rng, degree: int, size: int = 7) -> np.ndarray:
    C = np.zeros((size, size))
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            C[i, j] = rng.uniform(-1, 1)
    return C


SYM1 = Domain1D(DomainKind.SYMMETRIC, 1.0)
NON1 = Domain1D(DomainKind.NONNEGATIVE, 1.0)
SYM2 = Domain2D(DomainKind.SYMMETRIC, 1.0, 1.0)
NON2 = Domain2D(DomainKind.NONNEGATIVE, 1.0, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not (mod.RESULTS or mod.INFO):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS + mod.INFO:
        terminalreporter.write_line(line)
