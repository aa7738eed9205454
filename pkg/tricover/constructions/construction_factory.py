from fractions import Fraction
from numbers import Rational

from tricover.core.errors import UnsupportedError
from tricover.core.interfaces import IConstruction
from tricover.core.models import Covering, Variant
from .grid import GridConstruction
from .interleaved import InterleavedConstruction
from .layered import LayeredConstruction
from .plus_three import PlusThreeConstruction


class ConstructionFactory:
    def __init__(self) -> None:
        self.constructions_map = {
            Variant.GRID: GridConstruction,
            Variant.CS1: InterleavedConstruction,
            Variant.CS2: LayeredConstruction,
            Variant.PLUS3: PlusThreeConstruction,
        }

    def create_construction(self, variant: Variant | str) -> IConstruction | None:
        construction_class = self.constructions_map.get(variant)
        if construction_class:
            return construction_class()
        else:
            return None


def construction_for(variant: Variant | str) -> IConstruction:
    construction = ConstructionFactory().create_construction(variant)
    if construction is None:
        raise UnsupportedError(f"Unknown construction variant {variant!r}")
    return construction


def generate(variant: Variant | str, n: int, eps: Rational = 0, force: bool = False) -> Covering:
    return construction_for(variant).generate(n, eps, force)


def admissible_bound(variant: Variant | str, n: int) -> Fraction:
    return construction_for(variant).max_eps(n)


def cs1(n: int, eps: Rational, force: bool = False) -> Covering:
    return generate(Variant.CS1, n, eps, force)


def cs2(n: int, eps: Rational, force: bool = False) -> Covering:
    return generate(Variant.CS2, n, eps, force)


def plus3(n: int, eps: Rational, force: bool = False) -> Covering:
    return generate(Variant.PLUS3, n, eps, force)
