from fractions import Fraction


class TricoverError(Exception):
    pass


class GeometryError(TricoverError):
    pass


class InputError(TricoverError):
    pass


class InadmissibleParameterError(TricoverError):
    def __init__(self, message: str, bound: Fraction | None = None) -> None:
        super().__init__(message)
        self.bound = bound


class UnsupportedError(TricoverError):
    pass


class DocumentError(TricoverError):
    pass


class ConsistencyError(TricoverError):
    """An exact check failed that would contradict a proven statement."""
