from .base_construction import BaseConstruction
from .construction_factory import ConstructionFactory, admissible_bound, construction_for, cs1, cs2, generate, plus3
from .grid import GridConstruction, grid
from .interleaved import InterleavedConstruction
from .layered import LayeredConstruction, layer_deviations
from .plus_three import PlusThreeConstruction

__all__ = [
    "BaseConstruction",
    "ConstructionFactory",
    "GridConstruction",
    "InterleavedConstruction",
    "LayeredConstruction",
    "PlusThreeConstruction",
    "admissible_bound",
    "construction_for",
    "cs1",
    "cs2",
    "generate",
    "grid",
    "layer_deviations",
    "plus3",
]
