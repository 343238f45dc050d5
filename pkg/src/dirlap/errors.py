"""Exception types shared across the library."""


class DirlapError(Exception):
    """Base class for all library-specific errors."""


class FileFormatError(DirlapError, ValueError):
    """A CSV or JSON input could not be parsed into the expected shape."""


class DimensionMismatchError(DirlapError, ValueError):
    """Vector or matrix sizes do not agree with the graph/decomposition."""


class NearDefectiveError(DirlapError, ArithmeticError):
    """The eigenbasis is numerically too ill-conditioned to trust.

    Raised when the eigenvector condition number exceeds the configured
    limit or the computed dual basis fails the biorthogonality check.
    At that point the dual basis is numerical noise, so downstream
    transforms would silently return garbage.
    """


class RankDeficientError(DirlapError, ArithmeticError):
    """A sampling matrix does not have full column rank.

    Recovery from such samples is ambiguous (aliasing), so it is refused
    instead of returning one of infinitely many least-squares solutions.
    """
