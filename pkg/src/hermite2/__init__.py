"""Two-index Hermite polynomials H_{m,n}(x) = (-d/dx + 2x)^m x^n, built and checked in exact arithmetic."""
from .hermite import (
    GHParams,
    HermiteCache,
    alpha_triangle,
    classical,
    gould_hopper,
    h2_at_zero,
    h2_derivative_formula,
    h2_explicit,
    h2_operator,
    h2_recurrence,
    h2_rodrigues,
    hermite2,
)
from .identities import CheckReport, SuiteConfig, run_suite
from .poly import BiPoly, LaurentPoly, PolySeries2
from .rings import CoeffRing, QuadExt

__version__ = "0.1.0"
