"""Exact arithmetic toolkit: rationals, polynomials, truncated Laurent
series, fraction-free linear algebra, Sturm root isolation, and rational
interval arithmetic."""

from .interval import RatInterval, eval_interval
from .laurent import LaurentSeries, laurent_of_rational
from .linalg import Matrix, det_cofactor, det_exact, solve_exact
from .poly import Polynomial, poly_from_pairs, poly_gcd, poly_product
from .rational import format_rational, parse_rational
from .roots import (
    DEFAULT_ISOLATION_WIDTH,
    RootEnclosure,
    cauchy_root_bound,
    count_roots,
    is_squarefree,
    refine_enclosure,
    simplest_rational_between,
    sturm_chain,
    sturm_isolate,
)

__all__ = [
    "DEFAULT_ISOLATION_WIDTH",
    "LaurentSeries",
    "Matrix",
    "Polynomial",
    "RatInterval",
    "RootEnclosure",
    "cauchy_root_bound",
    "count_roots",
    "det_cofactor",
    "det_exact",
    "eval_interval",
    "format_rational",
    "is_squarefree",
    "laurent_of_rational",
    "parse_rational",
    "poly_from_pairs",
    "poly_gcd",
    "poly_product",
    "refine_enclosure",
    "simplest_rational_between",
    "solve_exact",
    "sturm_chain",
    "sturm_isolate",
]
