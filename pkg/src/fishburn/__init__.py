"""Exact enumeration and verification of Fishburn-number structures.

Matchings without 2-nestings, consecutive-descent-free inversion tables,
Fishburn diagrams with their sign-reversing involution, composition-paired
diagrams, and the generating functions they realize.
"""

from .diagrams import (
    FishburnDiagram,
    diagram_d_statistic,
    enumerate_Y,
    fixed_to_table,
    minimal_violation,
    psi,
    signed_weight,
)
from .errors import CapExceededError, FishburnError, ParseError, PreconditionError
from .matchings import (
    LEFT,
    NEIGHBOR,
    Matching,
    NestingKind,
    classify_insertion,
    count_nestings,
    enumerate_matchings,
    generate_left_nesting_free,
    insert_rightmost_arc,
)
from .refined import PairedDiagram, embed_f, enumerate_Y_tilde, f_inverse, is_in_image, psi_tilde
from .series import TruncatedPolynomial, fishburn_series, refined_series_rk, refined_series_simple
from .tables import InversionTable, d_statistic, enumerate_T, is_cdf, phi, phi_inverse

__version__ = "0.1.0"
