"""Exception types shared by all modules.

Every error carries a short machine-readable ``code`` so the CLI can emit
``error: <code>: <detail>`` lines.
"""


class PseudocircleError(Exception):
    code = "error"

    def __init__(self, detail: str, code: str | None = None) -> None:
        super().__init__(detail)
        self.detail = detail
        if code is not None:
            self.code = code


class MalformedInput(PseudocircleError):
    """Input data does not even describe a well-formed structure."""

    code = "malformed-input"


class PreconditionError(PseudocircleError):
    """An operation was called on a value violating its precondition."""

    code = "precondition"


class DomainError(PseudocircleError):
    """Arguments are outside the domain of an operation."""

    code = "domain"
