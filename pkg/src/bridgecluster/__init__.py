"""Cluster variables, F-polynomials and Alexander polynomials of two-bridge links."""

from .arith import ContinuedFraction, Parity, Ratio, cf_expand, cf_value, mirror, parity
from .cluster import Quiver, Seed, cluster_variable, mutation_trace
from .errors import InexactDivisionError, InvariantError, LaurentPhenomenonError, SeifertPathError
from .knot import alexander_skein_oracle, alexander_specialized, crossing_signs, seifert_path, triangle_signs
from .paths import cluster_via_paths, enumerate_paths, f_polynomial
from .poly import HalfLaurent, MultiLaurent, TropMonomial
from .triangle import AncestralTriangle, build

__version__ = "0.1.0"

__all__ = [
    "AncestralTriangle",
    "ContinuedFraction",
    "HalfLaurent",
    "InexactDivisionError",
    "InvariantError",
    "LaurentPhenomenonError",
    "MultiLaurent",
    "Parity",
    "Quiver",
    "Ratio",
    "Seed",
    "SeifertPathError",
    "TropMonomial",
    "alexander_skein_oracle",
    "alexander_specialized",
    "build",
    "cf_expand",
    "cf_value",
    "cluster_variable",
    "cluster_via_paths",
    "crossing_signs",
    "enumerate_paths",
    "f_polynomial",
    "mirror",
    "mutation_trace",
    "parity",
    "seifert_path",
    "triangle_signs",
]
