"""Small dense solves for the constraint systems ``R a = q``.

Partial-pivoting LU (LAPACK ``getrf``) with a LAPACK 1-norm condition
estimate. The matrices here are at most a few dozen rows.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, lapack, lu_factor, lu_solve

from .errors import IllConditioned, SingularMatrix

PIVOT_RTOL = 1e-14
COND_WARN = 1e12


@dataclass(frozen=True)
class SolveReport:
    solution: np.ndarray
    condition_estimate: float


class LUFactor:
    """Reusable factorisation of a square matrix.

    Raises :class:`SingularMatrix` if a pivot falls below
    ``1e-14 * max|R|`` and warns with :class:`IllConditioned` when the
    condition estimate exceeds ``1e12``.
    """

    def __init__(self, R):
        R = np.array(R, dtype=float)
        if R.ndim != 2 or R.shape[0] != R.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {R.shape}")
        if not np.all(np.isfinite(R)):
            raise SingularMatrix("matrix has non-finite entries")
        self.matrix = R
        self.size = R.shape[0]
        scale = np.max(np.abs(R)) if R.size else 0.0
        if scale == 0.0:
            raise SingularMatrix("zero matrix")
        with warnings.catch_warnings():
            # exact zero pivots are reported below as SingularMatrix
            warnings.simplefilter("ignore", LinAlgWarning)
            self._lu, self._piv = lu_factor(R, check_finite=False)
        pivots = np.abs(np.diag(self._lu))
        if np.min(pivots) < PIVOT_RTOL * scale:
            raise SingularMatrix(
                f"pivot {np.min(pivots):.3e} below {PIVOT_RTOL:g} * max|R| = {PIVOT_RTOL * scale:.3e}")
        anorm = np.max(np.sum(np.abs(R), axis=0))
        rcond, info = lapack.dgecon(self._lu, anorm, norm="1")
        self.condition_estimate = float(np.inf if rcond == 0 else max(1.0, 1.0 / rcond))
        if self.condition_estimate > COND_WARN:
            warnings.warn(f"condition estimate {self.condition_estimate:.3e} exceeds {COND_WARN:g}",
                          IllConditioned, stacklevel=2)

    def solve(self, q, trans: bool = False) -> np.ndarray:
        """Solve ``R x = q`` (or ``R^T x = q``) for one right-hand side."""
        q = np.asarray(q, dtype=float)
        if q.shape != (self.size,):
            raise ValueError(f"right-hand side has shape {q.shape}, expected ({self.size},)")
        return lu_solve((self._lu, self._piv), q, trans=1 if trans else 0, check_finite=False)

    def solve_columns(self, Q, trans: bool = False) -> np.ndarray:
        """Solve for every column of ``Q``; column-wise identical to :meth:`solve`."""
        Q = np.asarray(Q, dtype=float)
        out = np.empty_like(Q)
        for j in range(Q.shape[1]):
            out[:, j] = self.solve(Q[:, j], trans=trans)
        return out


def solve(R, q) -> SolveReport:
    fac = LUFactor(R)
    return SolveReport(fac.solve(q), fac.condition_estimate)


def solve_multi(R, Q) -> list[SolveReport]:
    """Solve ``R x = q`` for each vector in ``Q`` with one factorisation."""
    fac = LUFactor(R)
    return [SolveReport(fac.solve(q), fac.condition_estimate) for q in Q]
