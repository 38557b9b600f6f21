"""Exception types shared across the package."""


class ArrangementError(Exception):
    """Base class for all library errors."""


class ParseError(ArrangementError):
    """Invalid textual or JSON arrangement input.

    ``kind`` is one of ``"nonlinear"`` (a factor is not a linear form),
    ``"duplicate"`` (two factors cut the same hyperplane), ``"zero_form"``
    (a factor is identically zero) or ``"syntax"`` (malformed input).
    """

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class CatalogError(ArrangementError):
    """Unknown builtin name or invalid builtin parameters."""


class DomainError(ArrangementError):
    """Structurally valid input outside an operation's domain."""


class HypothesisError(ArrangementError):
    """A mathematical hypothesis required by the operation fails."""


class RefusalError(ArrangementError):
    """The operation needs a hypothesis the caller did not assert."""


class ResourceError(ArrangementError):
    """A computation would exceed the configured resource ceiling."""
