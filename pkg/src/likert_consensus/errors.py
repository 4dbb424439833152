"""Exception hierarchy.

Two families map onto CLI exit codes: :class:`ValidationError` (bad input data
or configuration, exit 1) and :class:`ComputationError` (numerical failure on
otherwise valid input, exit 2).
"""


class ConsensusLabError(Exception):
    """Base class. ``stage`` is filled in by the pipeline when it re-raises."""

    def __init__(self, message: str = "", *, row: int | None = None, stage: str | None = None):
        super().__init__(message)
        self.message = message
        self.row = row
        self.stage = stage

    def __str__(self) -> str:
        parts = []
        if self.stage is not None:
            parts.append(f"[stage {self.stage}]")
        if self.row is not None:
            parts.append(f"row {self.row}:")
        parts.append(self.message)
        return " ".join(parts)


class ValidationError(ConsensusLabError):
    pass


class ComputationError(ConsensusLabError):
    pass


# -- input / configuration ---------------------------------------------------

class EmptyInput(ValidationError):
    pass


class NegativeShare(ValidationError):
    pass


class SumOutOfTolerance(ValidationError):
    pass


class DimensionTooSmall(ValidationError):
    pass


class EmptySample(ValidationError):
    pass


class WindowNotPositive(ValidationError):
    pass


class WindowTooLarge(ValidationError):
    pass


class InsufficientOverlap(ValidationError):
    pass


class TooShort(ValidationError):
    pass


class TooFewObservations(ValidationError):
    pass


class HistoryTooShort(ValidationError):
    pass


class MissingExog(ValidationError):
    pass


class NonPositiveActual(ValidationError):
    pass


class DateMisalignment(ValidationError):
    pass


class BandwidthTooLarge(ValidationError):
    pass


class MissingColumn(ValidationError):
    def __init__(self, column: str, **kwargs):
        super().__init__(f"missing column {column!r}", **kwargs)
        self.column = column


class BadDate(ValidationError):
    pass


class GapInDates(ValidationError):
    pass


class NonPositiveRate(ValidationError):
    pass


# -- numerical ---------------------------------------------------------------

class RankDeficient(ComputationError):
    pass


class NonPositiveSSR(ComputationError):
    pass


class IoError(ValidationError):
    """Output could not be written (reported with the validation exit code)."""
