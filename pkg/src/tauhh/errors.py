"""Error taxonomy shared by the whole package.

Exit-code contract of the CLI: input problems (bad grammar, bad
presentation, non-admissible ideal, unsupported request) exit with 1,
resource limits and internal consistency failures exit with 2.
"""


class TauhhError(Exception):
    """Base class for all package errors."""

    exit_code = 2


class InputError(TauhhError):
    """User-facing input problems; CLI exit code 1."""

    exit_code = 1


class ParseError(InputError):
    """Malformed presentation file; carries line/column positions."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc = f" ({loc})"
        super().__init__(f"{message}{loc}")
        self.line = line
        self.column = column


class PresentationError(InputError):
    """Structurally invalid presentation (bad relation shape, bad field, ...)."""


class AdmissibilityError(InputError):
    """No power of the arrow ideal vanishes below the degree cap."""


class UnsupportedError(InputError):
    """Operation restricted to a smaller input class (e.g. monomial only)."""


class ResourceError(TauhhError):
    """A configured size limit was exceeded; names the offending stage."""


class InternalInconsistencyError(TauhhError):
    """Two routes that must agree disagreed; signals a bug upstream."""
