"""Exact classical and logarithmic Poisson cohomology for {x, y} = y**n on Q[x, y]."""

from .polynomial import BiPoly
from .parsing import parse_poly, render_poly
from .complexes import ComplexSpec, CochainElement
from .cohomology import cohomology_at, predicted_log_dims

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "parse_poly",
    "render_poly",
    "ComplexSpec",
    "CochainElement",
    "cohomology_at",
    "predicted_log_dims",
]
