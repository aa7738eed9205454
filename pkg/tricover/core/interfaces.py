from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational

from .models import Covering, Variant


class IConstruction(ABC):
    @property
    @abstractmethod
    def variant(self) -> Variant:
        pass

    @abstractmethod
    def max_eps(self, n: int) -> Fraction:
        pass

    @abstractmethod
    def generate(self, n: int, eps: Rational, force: bool = False) -> Covering:
        pass
