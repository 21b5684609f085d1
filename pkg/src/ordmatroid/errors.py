"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when arguments violate a documented precondition."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a hard size or work cap."""
