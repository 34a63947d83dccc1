"""Python front end for the compiled _hslab core."""

from _hslab import (
    Params,
    deficit_scaled_extremal,
    distance_scaled_extremal,
    eigenvalues,
    extremal_values,
    make_params,
    sharp_constant,
    spectral_gap,
    stability,
    verify_suite,
)

__all__ = [
    "Params",
    "deficit_scaled_extremal",
    "distance_scaled_extremal",
    "eigenvalues",
    "extremal_values",
    "make_params",
    "sharp_constant",
    "spectral_gap",
    "stability",
    "verify_suite",
]
