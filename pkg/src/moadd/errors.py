"""Exception hierarchy shared by every moadd module."""


class AdderError(ValueError):
    """Base class for domain errors raised by moadd."""


class InvalidBaseError(AdderError):
    pass


class InvalidWidthError(AdderError):
    pass


class NotAnAdditionError(AdderError):
    """Fewer than two operands."""


class TableTooLargeError(AdderError):
    pass


class InvalidNetlistError(AdderError):
    pass


class UnsupportedBaseError(AdderError):
    pass


class UseReconfigError(AdderError):
    """Too many operands for a single column LUT; build a reconfigured plan instead."""


class DomainViolation(AdderError):
    pass


class WidthViolation(AdderError):
    pass


class InvalidScenarioError(AdderError):
    pass
