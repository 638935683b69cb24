"""Composite Fourier series approximation of functions together with their
derivatives, plus a direct Fourier expansion baseline and error indexes."""
from .basis import BasisOperator, SupplementaryFamily, basis_operator, default_basis_1d, default_corner_basis
from .direct import DirectExpansion1D, DirectExpansion2D, build_direct, evaluate_direct
from .domain import (
    Domain1D,
    Domain2D,
    DomainKind,
    FunctionSpec1D,
    FunctionSpec2D,
    MultiIndex,
    SeriesKind1D,
    SeriesKind2D,
)
from .errors import (
    CFSMError,
    DegenerateNormalizer,
    IllConditioned,
    MissingComponent,
    NonFiniteIntegrand,
    NumericalError,
    OrderNotBuilt,
    OrderOutOfRange,
    SingularMatrix,
    UnknownSample,
    UnsupportedKind,
)
from .metrics import ErrorReport, SamplingGrid, aggregate_errors, error_report, make_grid, single_component_error
from .samples import SampleCase, get_sample
from .series1d import CompositeSeries1D, build_composite_1d, evaluate_1d
from .series2d import CompositeSeries2D, build_composite_2d, evaluate_2d

__version__ = "0.1.0"
