from typing import Optional


class Dirac1DError(Exception):
    pass


class ConfigError(Dirac1DError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NumericError(Dirac1DError, ValueError):
    pass


class GridMismatchError(NumericError):
    pass


class ArgumentError(NumericError):
    pass


class ResolutionError(NumericError):
    pass


class DegenerateStateError(NumericError):
    pass


class DivergenceError(NumericError):
    pass


class TrackingError(NumericError):
    pass
