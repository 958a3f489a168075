"""superosc: synthesis and analysis of minimum-energy superoscillations.

High-precision construction of bandlimited signals forced through
prescribed sub-Nyquist oscillations, on the real line and with a fixed
period, plus the eigenstructure, sensitivity and scaling experiments
that characterize them.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateFit,
    DimensionMismatch,
    DuplicateTimes,
    EmptyGridAfterZeroGuard,
    NoConvergence,
    NonFiniteValue,
    NotConverged,
    NotPositiveDefinite,
    ParseError,
    SuperoscError,
    TooManyPoints,
)
from .mpnum import (
    BigComplex,
    BigReal,
    DenseMatrix,
    EigenDecomposition,
    eigen_symmetric,
    required_precision,
    solve_spd,
    solver_epsilon,
)

__all__ = [
    "BigComplex",
    "BigReal",
    "DenseMatrix",
    "DegenerateFit",
    "DimensionMismatch",
    "DuplicateTimes",
    "EigenDecomposition",
    "EmptyGridAfterZeroGuard",
    "NoConvergence",
    "NonFiniteValue",
    "NotConverged",
    "NotPositiveDefinite",
    "ParseError",
    "SuperoscError",
    "TooManyPoints",
    "eigen_symmetric",
    "required_precision",
    "solve_spd",
    "solver_epsilon",
    "__version__",
]
