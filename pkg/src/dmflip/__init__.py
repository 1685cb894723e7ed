"""Delta-matroids, vertex flips and bicycle matroids over GF(2), GF(3) and GF(4)."""

from .deltamatroid import (
    DeltaMatroidWitness,
    Representation,
    VfSafety,
    is_delta_matroid,
    is_matroid_basis_system,
    is_vf_safe,
    matrix_delta_matroid,
    uniform_matroid,
    vf_transport,
)
from .errors import (
    BudgetExceeded,
    DmflipError,
    FieldDivisionError,
    InvariantViolation,
    ParseError,
    PivotUndefinedError,
    StructuralError,
    UnsupportedRepresentationError,
)
from .field import GF2, GF3, GF4, Automorphism, FieldElement, FieldKind
from .matrix import GroundSet, LabeledMatrix
from .setsystem import FlipNormalForm, FlipWord, SetSystem, normalize_word
from .subspace import (
    StandardRepresentation,
    Subspace,
    bases_parity_check,
    bicycle_matroid,
    bicycle_space,
    build_r_matrix,
    kernel,
    matroid_from_subspace,
    standardize,
)

__version__ = "0.1.0"
