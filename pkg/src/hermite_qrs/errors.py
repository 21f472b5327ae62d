"""Exception types shared across the package."""


class HermiteQrsError(Exception):
    """Base class for all errors raised by this package."""


class RecordParseError(HermiteQrsError, ValueError):
    """A record file could not be parsed under its declared format."""


class RecordValidationError(HermiteQrsError, ValueError):
    """Parsed record data violates an EcgRecord/PeakSegment invariant.

    Messages name the offending field and index, e.g. "r_peak 5 out of range".
    """


class WindowBoundsError(HermiteQrsError, ValueError):
    """A requested analysis window falls outside the record under pad_policy='error'."""


class AdmissibilityError(HermiteQrsError, ValueError):
    """The scaling factor places quadrature nodes outside the segment window.

    Carries ``max_delta``, the largest admissible scaling factor for the
    window length that was requested.
    """

    def __init__(self, message: str, max_delta: float):
        super().__init__(message)
        self.max_delta = max_delta


class SearchError(HermiteQrsError, ValueError):
    """The (delta, tau) search grid contains no evaluable point."""
