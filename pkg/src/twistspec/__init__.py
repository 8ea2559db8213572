"""Twisted eigenvalues of weighted Laplacians on isoperimetric pairs.

Closed-form transcendental solvers (Hermite functions for the Gaussian
weight, Bessel functions for power weights) cross-checked by a discrete
constrained Sturm-Liouville oracle, plus the rearrangement machinery and
the shape-optimization scan that certify the minimum at the symmetric
split.
"""

from .errors import (AccuracyError, DomainError, NumericalError,
                     ResourceError, TwistspecError)
from .measures import MeasureSpec, PairConfig, config_from_split
from .closedform import (TwistedSolution, dirichlet_halfball_power,
                         dirichlet_halfspace_gauss, twisted_pair_gauss,
                         twisted_pair_power)
from .grids import GridFunction
from .shapeopt import ScanCurve, certify_minimum, lambda_of_split, scan

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "DomainError", "NumericalError", "ResourceError",
    "TwistspecError", "MeasureSpec", "PairConfig", "config_from_split",
    "TwistedSolution", "dirichlet_halfball_power", "dirichlet_halfspace_gauss",
    "twisted_pair_gauss", "twisted_pair_power", "GridFunction",
    "ScanCurve", "certify_minimum", "lambda_of_split", "scan",
    "__version__",
]
