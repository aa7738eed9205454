from .constructions import ConstructionFactory, admissible_bound, cs1, cs2, generate, grid, plus3
from .core import (
    Covering,
    HTriangle,
    PLFunc,
    Region,
    SawtoothElt,
    bound_decision,
    projection_check,
    sample_falsify,
    verify,
)
from .interchange import CoveringDocument, SvgRenderer


__all__ = [
    "ConstructionFactory",
    "Covering",
    "CoveringDocument",
    "HTriangle",
    "PLFunc",
    "Region",
    "SawtoothElt",
    "SvgRenderer",
    "admissible_bound",
    "bound_decision",
    "cs1",
    "cs2",
    "generate",
    "grid",
    "plus3",
    "projection_check",
    "sample_falsify",
    "verify",
]
