"""Exception hierarchy shared by every isotype module."""

from pathlib import Path


class IsotypeError(Exception):
    """Base class for all isotype errors."""


class FieldError(IsotypeError):
    """Invalid field descriptor or malformed scalar text."""


class FieldMismatchError(IsotypeError):
    """Arithmetic between scalars of different fields."""


class DimensionMismatchError(IsotypeError):
    """A vector or map was used with a space of the wrong dimension."""


class InconsistentSystemError(IsotypeError):
    """A linear system has no solution."""


class ConfigError(IsotypeError):
    """Invalid configuration value."""


class PreconditionError(IsotypeError):
    """An operation was called on input that does not meet its requirements."""


class NotIdempotentError(PreconditionError):
    """The element is not an idempotent, or not a proper one."""


class DecompositionError(IsotypeError):
    """Eigenspaces or isotypic components do not exhaust the space."""


class ClosureError(IsotypeError):
    """A span that should be a subalgebra is not closed under the bracket."""


class GradingError(DecompositionError):
    """ad H has eigenvalues outside the expected weight range."""


class StructureError(IsotypeError):
    """Catalog input violates one of its defining identities."""


class SpecError(IsotypeError):
    """Problem in an algebra-spec file, with its location when known."""

    def __init__(
        self,
        message: str,
        path: Path | str | None = None,
        line: int | None = None,
        column: int | None = None,
    ):
        self.message = message
        self.path = str(path) if path is not None else None
        self.line = line
        self.column = column
        super().__init__(self.describe())

    def describe(self) -> str:
        """Render as ``path:line:column: message``."""
        prefix = ""
        if self.path:
            prefix = self.path
            if self.line is not None:
                prefix += f":{self.line}"
                if self.column is not None:
                    prefix += f":{self.column}"
            prefix += ": "
        return prefix + self.message
