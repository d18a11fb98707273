"""Exact independent set polynomial toolkit.

Rational inputs accept int, fractions.Fraction or "p/q" strings; rational
results are Fractions and counts are ints.
"""

from ._ispoly import (
    CapacityError,
    DomainError,
    Error,
    Graph,
    IoError,
    apply_normalization,
    attach_path,
    clone_factor,
    clone_family,
    comb,
    count_is_of_size,
    count_sat,
    count_x3sat,
    delete_vertex,
    interpolate_coeffs,
    is_nondegenerate,
    isp_coeffs,
    isp_eval,
    isp_multivariate,
    k_clone,
    normalize_point,
    path_weights,
    s_clone,
    sat_count_via_is,
    schaefer_reduce,
    verify,
    x3sat_to_graph,
    x_of_S,
)

__all__ = [name for name in dir() if not name.startswith("_")]
