"""Exception types shared across the package."""


class HibiregError(Exception):
    """Base class for all errors raised by hibireg."""


class PosetSyntaxError(HibiregError, ValueError):
    """Malformed poset description text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CycleError(HibiregError, ValueError):
    """The declared relations are not antisymmetric."""


class DuplicateElementError(HibiregError, ValueError):
    pass


class CapExceeded(HibiregError, RuntimeError):
    """An enumeration or construction ran past its configured cap."""

    def __init__(self, what, cap):
        super().__init__(f"{what} exceeds cap of {cap}")
        self.what = what
        self.cap = cap


class EmbeddingError(HibiregError, AssertionError):
    """A planar embedding invariant was violated."""
