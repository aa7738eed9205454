from .cover_verify import CoverageVerifier, VerifyReport, Witness, sample_falsify, six_landmarks, verify
from .errors import (
    ConsistencyError,
    DocumentError,
    GeometryError,
    InadmissibleParameterError,
    InputError,
    TricoverError,
    UnsupportedError,
)
from .geometry import contains_point, cross_section, interiors_disjoint, interiors_meet, lattice_triangle, trigon_region
from .interfaces import IConstruction
from .models import Covering, HTriangle, Orientation, PieceRole, Rat, Region, Variant, to_rat
from .plfunc import PLFunc, Piece
from .projection import BoundReport, ProjectionReport, bound_decision, bound_profile, f_T, projection_check
from .sawtooth import SawtoothElt, classify_lemma4, corollary3_check, validate_lemma3

__all__ = [
    "BoundReport",
    "ConsistencyError",
    "CoverageVerifier",
    "Covering",
    "DocumentError",
    "GeometryError",
    "HTriangle",
    "IConstruction",
    "InadmissibleParameterError",
    "InputError",
    "Orientation",
    "PLFunc",
    "Piece",
    "PieceRole",
    "ProjectionReport",
    "Rat",
    "Region",
    "SawtoothElt",
    "TricoverError",
    "UnsupportedError",
    "Variant",
    "VerifyReport",
    "Witness",
    "bound_decision",
    "bound_profile",
    "classify_lemma4",
    "contains_point",
    "corollary3_check",
    "cross_section",
    "f_T",
    "interiors_disjoint",
    "interiors_meet",
    "lattice_triangle",
    "projection_check",
    "sample_falsify",
    "six_landmarks",
    "to_rat",
    "trigon_region",
    "validate_lemma3",
    "verify",
]
