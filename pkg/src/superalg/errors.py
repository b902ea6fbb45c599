"""Error types shared across the engine."""

from __future__ import annotations


class SuperalgError(Exception):
    """Base class for engine errors."""


class TableMismatchError(SuperalgError):
    """Operands built over different generator tables."""


class MissingImageError(SuperalgError):
    """A morphism application met a generator without an image."""


class StepLimitExceeded(SuperalgError):
    """Rewriting did not reach a normal form within the step budget."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class PoleError(SuperalgError):
    """A coefficient has a pole at the requested limit point."""

    def __init__(self, message: str, word_str: str = "", scalar_str: str = ""):
        super().__init__(message)
        self.word_str = word_str
        self.scalar_str = scalar_str


class ParseError(SuperalgError):
    """Expression or presentation-file syntax error with position info."""

    def __init__(self, message: str, pos: int = -1):
        super().__init__(message)
        self.pos = pos
