class DeltaGraphError(ValueError):
    """Base class for user-facing input errors."""

    exit_code = 3


class DescriptorError(DeltaGraphError):
    exit_code = 3


class SizeCapError(DeltaGraphError):
    exit_code = 4


class UnknownElementError(DeltaGraphError):
    exit_code = 5


class SelectorError(DeltaGraphError):
    exit_code = 6
