"""Exception types shared across the package."""

from __future__ import annotations


class LyuconeError(Exception):
    """Base class for every error raised by this package."""


class CompositionError(LyuconeError):
    """Matrix shapes or basis labels do not line up."""


class GradedShapeError(LyuconeError):
    """Graded operators act on incompatible spaces."""


class PreconditionError(LyuconeError):
    """A documented precondition of an operation was violated."""


class InvalidClassError(LyuconeError):
    """A divisor-class selection lies outside the allowed ample cone."""


class NonEquidimensionalError(LyuconeError):
    """Union pieces have different dimensions; use ``nonequidim_x2``."""


class UnsupportedProductError(LyuconeError):
    """Both product factors have several nonzero pieces."""


class UnsupportedOperationError(LyuconeError):
    """The requested variant is outside the supported range."""


class OutOfRangeError(LyuconeError):
    """Requested table entries outside the computable index range."""


class InvalidComplexError(LyuconeError):
    """Chain-complex boundary maps do not square to zero."""


class InternalInconsistencyError(LyuconeError):
    """An internal exactness or well-definedness audit failed.

    Seeing this means an assembled presentation is broken, not that the
    input was wrong.
    """


class ScriptError(LyuconeError):
    """A diagnostic for script input, carrying line/column and the token."""

    def __init__(self, message: str, line: int, col: int, token: str = ""):
        self.message = message
        self.line = line
        self.col = col
        self.token = token
        at = f" (at {token!r})" if token else ""
        super().__init__(f"line {line}, col {col}: {message}{at}")
