"""Betti tables, Koszul tails and Lefschetz properties of Artinian reductions of point sets."""

from .exactla import DEFAULT_PRIME, Matrix, PrimeField, extend_basis, kernel_basis, rank
from .geometry import (
    PointSet,
    all_but_one_configuration,
    artinian_reduction,
    construct_all_but_one,
    evaluation_matrix,
    further_quotient,
    reduce_points,
    sample_point_on_hypersurface,
    vanishing_ideal,
)
from .fixtures import load_fixture
from .groebner import ArtinianAlgebra, GroebnerBasis, buchberger, make_artinian_algebra, normal_form
from .invariants import BettiTable, betti_table, detect_koszul_tails, euler_check, koszul_strand
from .lefschetz import multiplication_matrix, slp, verify_theorem1, verify_theorem2, wlp
from .polyring import LinearForm, Polynomial, eliminate_variable, parse_polynomial

__version__ = "0.1.0"
