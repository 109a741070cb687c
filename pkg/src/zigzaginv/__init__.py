"""Exact invariants of zig-zag interval maps and their surface dynamics."""

from .algebraic import AlgebraicReal, LambdaExpression, compare, perron_root, sign_at
from .farey import mediant, parents, path_to_root, enumerate_level
from .intpoly import IntPolynomial, char_poly, digit_polynomial, reverse, \
    series_reciprocal, simple_zeta_poly
from .kneading import KneadingSequence, principal_kneading, decorate, \
    farey_concat, edge_body, twisted_compare, kneading_data, SignData
from .zigzag import ZigZagMap, build, permutation, strong_markov, weak_markov, \
    signed_markov, count_fixed_numeric
from .invariants import singularity_report, rotation_additivity_check, \
    zeta_prefix, surface_polynomials, double_cover, lambda_bounds, \
    monotonicity_scan
from .burau import BraidWord, reduced_burau, symplectic_poly, match_digit, \
    search_braid, full_twist

__version__ = "0.1.0"
