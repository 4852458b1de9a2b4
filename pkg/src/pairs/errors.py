"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class PairsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PairsError, ValueError):
    """Malformed input or violated precondition (CLI exit code 2)."""


class ParseError(InputError):
    def __init__(self, message, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
            if text:
                message += f": {text!r}"
        super().__init__(message)


class DomainError(InputError):
    """Input parses fine but lies outside the domain of the operation."""


class UnitIdealError(DomainError):
    """Raised where the unit ideal has no finite answer (e.g. its lct is +inf)."""


class BudgetExceeded(PairsError):
    """An enumeration would exceed the configured budget (CLI exit code 3)."""
