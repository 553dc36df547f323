"""Exception types shared across the library.

The CLI maps these onto exit codes: invalid states/parameters exit 2,
numerical failures (including I/O) exit 3, usage errors exit 1.
"""


class ExposureLabError(Exception):
    """Base class for all library errors."""


class DimensionError(ExposureLabError, ValueError):
    """Operands have incompatible or non-square dimensions."""


class InvalidArgumentError(ExposureLabError, ValueError):
    """A scalar argument is outside its admissible range."""


class InvalidStateError(ExposureLabError, ValueError):
    """A matrix is not a valid density matrix (trace/positivity violated)."""


class InvalidOperatorError(ExposureLabError, ValueError):
    """An operator expression does not produce a Hermitian matrix."""


class RankDeficientStateError(ExposureLabError, ValueError):
    """State has (near-)zero eigenvalues where full rank is required."""


class InconsistentPuritiesError(ExposureLabError, ValueError):
    """A purity sequence does not correspond to any valid spectrum."""


class NoSolutionError(ExposureLabError, ValueError):
    """A requested level set or extremum does not exist."""


class NumericalFailure(ExposureLabError, RuntimeError):
    """A numerical routine failed to converge or underflowed."""


class TruncationError(NumericalFailure):
    """A truncated-basis computation did not converge in the cutoff."""
