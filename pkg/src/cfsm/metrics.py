"""Sampling grids and normalized mean-absolute error indexes.

For a derivative component ``u^(k1,k2)`` and a subset ``S`` of the sampling
grid the single-component error is::

    e_S = sum_{x in S} |approx(x) - exact(x)| / (|S| * u_max)

where ``u_max = max |exact|`` over the *whole* grid. Aggregates average
single-component errors: ``order_p`` over the components with
``k1 + k2 = p``, ``up_to_p`` over those with ``k1 + k2 <= p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .domain import Domain1D, Domain2D, FunctionSpec1D, MultiIndex, enumerate_graded
from .errors import DegenerateNormalizer, MissingComponent

SUBSETS_1D = ("overall", "interior", "boundary")
SUBSETS_2D = ("overall", "interior", "boundary", "corner")

#: normalizers below this are treated as an identically vanishing component
UMAX_FLOOR = 1e-300


@dataclass(frozen=True)
class SamplingGrid:
    """Uniform grid including the endpoints, with point classes as boolean masks."""
    axes: tuple[np.ndarray, ...]
    masks: dict[str, np.ndarray] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.axes)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.axes)

    @property
    def subsets(self) -> tuple[str, ...]:
        return SUBSETS_1D if self.dim == 1 else SUBSETS_2D

    def count(self, subset: str) -> int:
        return int(self.masks[subset].sum())

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(self.count(s) for s in self.subsets)


def make_grid(domain: Domain1D | Domain2D, N1: int, N2: int | None = None) -> SamplingGrid:
    """``N1`` (x ``N2``) equally spaced points; ``N2`` defaults to ``N1``."""
    if isinstance(domain, Domain1D):
        if N1 < 3:
            raise ValueError("need at least 3 points per axis")
        x = np.linspace(domain.lo, domain.hi, N1)
        edge = np.zeros(N1, bool)
        edge[[0, -1]] = True
        masks = {"overall": np.ones(N1, bool), "interior": ~edge, "boundary": edge}
        return SamplingGrid((x,), masks)
    N2 = N1 if N2 is None else N2
    if min(N1, N2) < 3:
        raise ValueError("need at least 3 points per axis")
    x1 = np.linspace(domain.x1.lo, domain.x1.hi, N1)
    x2 = np.linspace(domain.x2.lo, domain.x2.hi, N2)
    e1 = np.zeros(N1, bool)
    e1[[0, -1]] = True
    e2 = np.zeros(N2, bool)
    e2[[0, -1]] = True
    E1, E2 = np.meshgrid(e1, e2, indexing="ij")
    corner = E1 & E2
    masks = {
        "overall": np.ones((N1, N2), bool),
        "interior": ~(E1 | E2),
        "boundary": (E1 ^ E2),
        "corner": corner,
    }
    return SamplingGrid((x1, x2), masks)


def exact_on_grid(spec, k, grid: SamplingGrid) -> np.ndarray:
    if grid.dim == 1:
        return spec(k, grid.axes[0])
    X1, X2 = np.meshgrid(*grid.axes, indexing="ij")
    return spec(k[0], k[1], X1, X2)


def approx_on_grid(approx, k, grid: SamplingGrid) -> np.ndarray:
    """Values of an expansion (anything with ``evaluate`` / ``evaluate_grid``) on the grid."""
    if grid.dim == 1:
        return np.asarray(approx.evaluate(k, grid.axes[0]))
    if hasattr(approx, "evaluate_grid"):
        return np.asarray(approx.evaluate_grid(k[0], k[1], *grid.axes))
    X1, X2 = np.meshgrid(*grid.axes, indexing="ij")
    return np.asarray(approx.evaluate(k[0], k[1], X1, X2))


def subset_errors(approx_vals: np.ndarray, exact_vals: np.ndarray, grid: SamplingGrid) -> dict[str, float]:
    """Single-component errors of one component on every subset of the grid."""
    umax = float(np.max(np.abs(exact_vals)))
    if umax < UMAX_FLOOR:
        raise DegenerateNormalizer("exact component vanishes on the sampling grid")
    diff = np.abs(approx_vals - exact_vals)
    return {s: float(diff[grid.masks[s]].sum()) / (grid.count(s) * umax) for s in grid.subsets}


def single_component_error(approx, exact, k, grid: SamplingGrid, subset: str = "overall") -> float:
    """Error index of component ``k`` (int in 1D, ``(k1, k2)`` in 2D) on ``subset``."""
    if subset not in grid.subsets:
        raise ValueError(f"unknown subset {subset!r}; expected one of {grid.subsets}")
    return subset_errors(approx_on_grid(approx, k, grid), exact_on_grid(exact, k, grid), grid)[subset]


def _components(p: int, dim: int, upto: bool):
    if dim == 1:
        return list(range(p + 1)) if upto else [p]
    return [i for i in enumerate_graded(p) if upto or i.k1 + i.k2 == p]


def aggregate_errors(singles: Mapping, p: int, mode: str, dim: int | None = None) -> float:
    """Mean of single-component errors: ``mode`` is ``"order_p"`` or ``"up_to_p"``.

    ``singles`` maps a component (int in 1D, ``(k1, k2)`` in 2D) to its error.
    """
    if mode not in ("order_p", "up_to_p"):
        raise ValueError(f"unknown aggregate mode {mode!r}")
    if dim is None:
        dim = 1 if all(np.ndim(k) == 0 for k in singles) else 2
    keys = _components(p, dim, mode == "up_to_p")
    lookup = {(tuple(k) if dim == 2 else k): v for k, v in singles.items()}
    vals = []
    for k in keys:
        key = tuple(k) if dim == 2 else k
        if key not in lookup:
            raise MissingComponent(f"no single-component error for {key}")
        vals.append(lookup[key])
    return float(np.mean(vals))


@dataclass
class ErrorReport:
    """All error indexes of one expansion of one sample.

    ``singles[subset][k]`` is the single-component error (``nan`` for a
    component whose exact values vanish on the grid; those are listed in
    ``degenerate``).
    """
    sample: int | str
    method: str
    M: int
    N: int | None
    dim: int
    max_order: int
    singles: dict[str, dict] = field(default_factory=dict)
    degenerate: list = field(default_factory=list)

    @property
    def subsets(self) -> tuple[str, ...]:
        return SUBSETS_1D if self.dim == 1 else SUBSETS_2D

    def components(self) -> list:
        return _components(self.max_order, self.dim, True)

    def order_p(self, p: int, subset: str = "overall") -> float:
        return aggregate_errors(self.singles[subset], p, "order_p", self.dim)

    def up_to_p(self, p: int, subset: str = "overall") -> float:
        return aggregate_errors(self.singles[subset], p, "up_to_p", self.dim)

    def records(self) -> list[tuple]:
        """Flat ``(index_name, subset, value)`` rows: singles, then order-p, then up-to-p."""
        rows = []
        for k in self.components():
            name = f"e^({k})" if self.dim == 1 else f"e^({k[0]},{k[1]})"
            rows += [(name, s, self.singles[s][k]) for s in self.subsets]
        for p in range(self.max_order + 1):
            rows += [(f"|e|^{p}", s, self.order_p(p, s)) for s in self.subsets]
        for p in range(self.max_order + 1):
            rows += [(f"||e||^{p}", s, self.up_to_p(p, s)) for s in self.subsets]
        return rows


def error_report(approx, spec, max_order: int, grid: SamplingGrid, *, sample=None,
                 method: str = "", M: int = 0, N: int | None = None) -> ErrorReport:
    """Evaluate every component up to ``max_order`` on ``grid``."""
    dim = 1 if isinstance(spec, FunctionSpec1D) else 2
    rep = ErrorReport(sample, method, M, N, dim, max_order, {s: {} for s in grid.subsets})
    for k in _components(max_order, dim, True):
        try:
            errs = subset_errors(approx_on_grid(approx, k, grid), exact_on_grid(spec, k, grid), grid)
        except DegenerateNormalizer:
            errs = {s: float("nan") for s in grid.subsets}
            rep.degenerate.append(k)
        for s, v in errs.items():
            rep.singles[s][k] = v
    return rep
