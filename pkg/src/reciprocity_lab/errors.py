"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument falls outside an operation's contract."""


class CoprimalityError(InputError):
    """An argument shares a factor with the modulus where coprimality is required."""


class ResourceCapError(RuntimeError):
    """A computation would touch more lattice points than the configured cap."""
