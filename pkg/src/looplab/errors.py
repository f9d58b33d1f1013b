"""Exception hierarchy shared by every looplab module."""


class LoopLabError(Exception):
    """Base class for all errors raised by looplab."""


class OutOfRangeEntry(LoopLabError):
    def __init__(self, row: int, col: int, value: int, order: int):
        self.row, self.col, self.value, self.order = row, col, value, order
        super().__init__(f"entry at row {row}, column {col} is {value}, outside 0..{order - 1}")


class ShapeError(LoopLabError):
    """A table is not square."""


class NotALoop(LoopLabError):
    """A table was used as a loop but failed loop validation."""


class OrderMismatch(LoopLabError):
    pass


class EmptySet(LoopLabError):
    pass


class NotASubloop(LoopLabError):
    pass


class NotNormal(LoopLabError):
    pass


class OrderTooLarge(LoopLabError):
    pass


class InvalidOrder(LoopLabError):
    pass


class UnknownFilter(LoopLabError):
    pass


class UnknownCatalogEntry(LoopLabError):
    pass


class CatalogSelfCheckFailed(LoopLabError):
    """A built-in construction failed one of its load-time assertions (a defect)."""


class ParseError(LoopLabError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.message = message
