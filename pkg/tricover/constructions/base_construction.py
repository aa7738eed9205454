import logging

from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational

from tricover.core.errors import InadmissibleParameterError, InputError
from tricover.core.interfaces import IConstruction
from tricover.core.models import Covering, HTriangle, PieceRole, Region, to_rat


Placement = tuple[HTriangle, PieceRole]


class BaseConstruction(IConstruction, ABC):
    MIN_N = 2

    def __init__(self) -> None:
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def place_pieces(self, n: int, eps: Fraction) -> list[Placement]:
        pass

    def target(self, n: int, eps: Fraction) -> Region:
        return Region((HTriangle.up(0, 0, n + eps),))

    def check_params(self, n: int, eps: Fraction, force: bool) -> None:
        if n < self.MIN_N:
            raise InputError(f"{self.variant} needs n >= {self.MIN_N}, got {n}")
        if eps < 0:
            raise InadmissibleParameterError(f"{self.variant} needs eps >= 0, got {eps}", bound=Fraction(0))
        if force:
            return
        bound = self.max_eps(n)
        if eps > bound:
            raise InadmissibleParameterError(
                f"{self.variant}(n={n}) needs eps <= {bound}, got {eps}", bound=bound
            )
        if eps == 0 and bound > 0:
            raise InadmissibleParameterError(
                f"{self.variant}(n={n}) needs 0 < eps <= {bound}; use grid for eps = 0", bound=bound
            )

    def generate(self, n: int, eps: Rational, force: bool = False) -> Covering:
        eps = to_rat(eps)
        self.check_params(n, eps, force)
        if force and eps > self.max_eps(n):
            self.logger.warning(f"Forcing {self.variant}(n={n}) at eps={eps} beyond {self.max_eps(n)}")

        placements = self.place_pieces(n, eps)
        self.logger.info(f"Generated {self.variant}(n={n}, eps={eps}) with {len(placements)} pieces")
        return Covering(
            target=self.target(n, eps),
            pieces=tuple(tri for tri, _ in placements),
            label=f"{self.variant}(n={n}, eps={eps})",
            roles=tuple(role for _, role in placements),
        )
