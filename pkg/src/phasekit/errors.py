"""Exception hierarchy shared by all phasekit modules."""


class PhasekitError(Exception):
    """Base class for all phasekit errors."""


class DomainError(PhasekitError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class StateSpecError(PhasekitError, ValueError):
    """A state specification string or object is invalid.

    The message names the offending token where applicable.
    """


class ConvergenceError(PhasekitError):
    """A series or quadrature failed to reach the requested accuracy."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class EnvelopeError(PhasekitError):
    """The rejection-sampling envelope was violated beyond tolerance.

    Indicates a numerical bug, not bad luck.
    """


class EventFileError(PhasekitError, ValueError):
    """An event file is malformed, truncated, or fails its checksum."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset
