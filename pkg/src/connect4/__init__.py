"""Lex standard sets, Connect Four addition and decompositions, and the
Connect Four construction of lex Groebner bases for sliced ideals."""

from .connect4gb import (
    ConnectFourResult,
    SlicedInstance,
    Summand,
    build_phi,
    characteristic_poly,
    membership_check,
    reduce_to_psi,
)
from .decomposition import (
    Decomposition,
    build_iterated_graph,
    count_admissible_subgraphs,
    decomposition_number,
    enumerate_decompositions,
)
from .errors import (
    ClosureViolation,
    Connect4Error,
    DimensionMismatch,
    DuplicateEvaluationPoints,
    DuplicatePoints,
    FieldMismatch,
    InternalReductionFailure,
    InvalidBasis,
    SizeLimitExceeded,
    ValidationError,
)
from .fields import GF, QQ, parse_field
from .pointset import PointSet, intersect_ideals_gb, slice_points, standard_set_of, vanishing_ideal_gb
from .polynomial import LexPolynomial, ReducedGB, extend_basis, normal_form
from .staircase import (
    StandardSet,
    border,
    connect_four_add,
    connect_four_sum,
    corners,
    embed,
    enumerate_standard_sets,
    height,
    project,
)
from .stratum import StratumReport, dimension_vs_nr, report

__version__ = "0.1.0"
