"""Exception types raised by hopfplumb."""


class NoRealRootError(ValueError):
    """A polynomial has no real root in the searched range."""


class UnresolvedError(RuntimeError):
    """A certified decision could not be reached at the allowed precision."""
