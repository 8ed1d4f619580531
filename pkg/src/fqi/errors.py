"""Exception taxonomy shared across the toolkit.

The CLI maps these to distinct exit codes, so raise the right family:
bad user-supplied data is an InputDataError, a numeric procedure that
cannot produce a valid result is a ComputationError.
"""


class InputDataError(ValueError):
    """User-supplied input is unusable: files, formats, CSV rows, shapes."""


class ComputationError(ValueError):
    """A numeric procedure could not produce a valid result."""
