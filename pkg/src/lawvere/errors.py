"""Exception hierarchy shared by every module."""


class LawvereError(Exception):
    """Base class for all errors raised by this package."""


class CompositionError(LawvereError, ValueError):
    """Raised when two morphisms (or functors) are not composable."""


class ContractError(LawvereError, ValueError):
    """Raised when an operation is called outside its precondition."""


class NotAnIsomorphism(LawvereError, ValueError):
    """Raised when a component map fails to be a bijection on checked data."""

    def __init__(self, message, n=None, witness=None):
        super().__init__(message)
        self.n = n
        self.witness = witness


class NormalizationError(LawvereError, RuntimeError):
    """Raised when term normalization runs out of fuel."""


class ScopeError(LawvereError, ValueError):
    """Raised when a term mentions a variable outside its declared scope."""

    def __init__(self, message, variable=None):
        super().__init__(message)
        self.variable = variable


class TermSyntaxError(LawvereError, ValueError):
    """Raised on malformed S-expressions; carries the offending offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class SpecError(LawvereError, ValueError):
    """Raised when a spec file is malformed or fails validation."""
