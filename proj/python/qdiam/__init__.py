"""Exact isodiametric computations in the subspace lattice of F_q^n."""

from ._qdiam import (
    Family,
    QdiamError,
    Subspace,
    ball,
    canonical_double_ball,
    contains,
    count_profile,
    delta,
    double_ball,
    ekr_bound,
    enumerate_layer,
    gauss_binom,
    hm_excess,
    hm_family,
    hm_star3,
    intersect,
    intersection_dim,
    k_family,
    k_star3,
    kleitman_bound,
    lower_family,
    max_admissible_family,
    max_diameter_family,
    nontrivial_intersecting_bound,
    odd_stability_bound,
    perp,
    selftest,
    star,
    sum,
    sweep,
    typeA_even_bound,
    typeB_even_bound,
    upper_family,
)

__version__ = "0.1.0"


def line(q, n, i=0):
    """span(e_i) in F_q^n."""
    return coordinate(q, n, [i])


def coordinate(q, n, idx):
    """span(e_i for i in idx)."""
    return Subspace.from_rows(q, n, [[1 if j == i else 0 for j in range(n)] for i in idx])
