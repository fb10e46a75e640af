"""Exception types shared across the package."""


class FramedLinksError(Exception):
    """Base class for library errors."""


class ParseError(FramedLinksError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
        self.reason = message


class DivisionByZero(FramedLinksError, ZeroDivisionError):
    pass


class MismatchedStrands(FramedLinksError, ValueError):
    pass


class MismatchedAlgebra(FramedLinksError, ValueError):
    pass


class MismatchedOrder(FramedLinksError, ValueError):
    pass


class BoundExceeded(FramedLinksError, ValueError):
    pass


class DegenerateOrder(FramedLinksError, ValueError):
    pass


class IncompatibleOrders(FramedLinksError, ValueError):
    pass


class ParamDomainError(FramedLinksError, ValueError):
    pass


class LevelError(FramedLinksError, ValueError):
    pass


class OracleBoundExceeded(FramedLinksError, ValueError):
    pass
