"""Exception types shared across the package."""


class UnsupportedParametersError(ValueError):
    """Raised for parameter cells outside the supported range (max{r,l} <= 2)."""


class ParseError(ValueError):
    """Raised on malformed graph input; carries a 1-based line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ContractError(RuntimeError):
    """A documented precondition was violated by the caller."""


class SizeGuardError(ValueError):
    """A brute-force oracle was asked to exceed its instance-size guard."""


class TreewidthLimitError(RuntimeError):
    """Tree decomposition width exceeded the configured cap.

    The message advises falling back to the brute mincut backend.
    """
