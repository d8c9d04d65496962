class JPMError(Exception):
    """Base class for every error raised by jpm"""


class AlphabetError(JPMError, ValueError):
    pass


class DimensionError(JPMError, ValueError):
    pass


class EmptyQueryError(JPMError, ValueError):
    def __init__(self, message: str = "empty query"):
        super().__init__(message)


class NegativeComponentError(JPMError, ValueError):
    pass


class PositionError(JPMError, IndexError):
    pass


class CapabilityError(JPMError, ValueError):
    """The selected index cannot serve this text or query"""


class IndexFormatError(JPMError):
    pass


class TextFormatError(JPMError):
    pass


class FitError(JPMError, ValueError):
    pass


class ContractViolation(AssertionError):
    """A caller broke a documented precondition (e.g. a non-bracketing hint)"""


class InvariantViolation(AssertionError):
    """A checked-mode run observed a broken algorithm invariant"""
