"""Exact free-group words, tiling substitutions and interval fractals."""

from ._core import (
    Error,
    ParameterError,
    ResourceError,
    apply,
    approx_fractal,
    dual_iterate,
    exact_fractal,
    family,
    incidence_matrix,
    minimal_a,
    reduce,
    run,
    surface,
    verify,
)

__all__ = [
    "Error",
    "ParameterError",
    "ResourceError",
    "apply",
    "approx_fractal",
    "dual_iterate",
    "exact_fractal",
    "family",
    "incidence_matrix",
    "minimal_a",
    "reduce",
    "run",
    "surface",
    "verify",
]
