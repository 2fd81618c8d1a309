"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input violates a documented precondition (bad graph, quiver, partition...)."""


class CapExceeded(RuntimeError):
    """A configured enumeration or group-order cap would be exceeded."""
