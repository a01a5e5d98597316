"""Exception hierarchy for garside-germs.

Negative mathematical answers (a germ that is not left-associative, a pair
that is not greedy, ...) are returned as report values. Exceptions are
reserved for inputs an operation cannot work with.
"""


class GermError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(GermError, ValueError):
    """A germ table or germ file is malformed (ids out of range, missing identity...)."""


class PreconditionError(GermError, ValueError):
    """Endpoint mismatch, non-composable word or unknown element name."""


class UnsupportedGermError(GermError):
    """The germ lacks an axiom or verdict the requested operation depends on."""

    def __init__(self, message: str, criterion: str | None = None, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.criterion = criterion
        self.witness = witness


class InvalidMoveError(GermError, ValueError):
    """A rewrite step whose product is undefined or whose factorization is wrong."""


class NormalizationError(GermError, RuntimeError):
    """Normalization exceeded its step budget; the Garside verdict was wrong."""


class DerivationError(GermError):
    """A germ derived from a Coxeter group failed its post-construction checks."""


class EnumerationLimitError(GermError):
    """Enumeration produced more normal forms than the configured limit."""
