"""Exception hierarchy shared across the package.

Two families matter for callers: `DataFormatError` for unparseable input
files and `DomainError` for requests that are well-formed but cannot be
answered (unknown word, k too large, empty evaluation bucket). The CLI maps
each family to its own exit status.
"""


class ToposenseError(Exception):
    """Base class for all package errors."""


class DataFormatError(ToposenseError, ValueError):
    """An input file violates its documented format."""


class EmbeddingFormatError(DataFormatError):
    """Embedding text file is malformed; `line` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GroundTruthFormatError(DataFormatError):
    """Ground-truth sense-count file is malformed; `line` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(ToposenseError, ValueError):
    """A well-formed request that has no answer on the given data."""


class UnknownWordError(DomainError):
    """Query word is not in the embedding vocabulary."""


class NeighborCountError(DomainError):
    """Requested neighbor count is out of range for the vocabulary."""


class NoFiniteBarsError(DomainError):
    """Diagram has no finite bars, so no noise threshold exists."""


class EmptyBucketError(DomainError):
    """No evaluable word falls inside the requested sense-count bucket."""
