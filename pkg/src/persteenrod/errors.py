"""Exception hierarchy.

Every error carries a short machine-readable ``code``. Input problems derive
from :class:`InputError` (CLI exit status 1); broken internal invariants derive
from :class:`InconsistencyError` (exit status 2).
"""


class PersteenrodError(Exception):
    code = "Error"


class InputError(PersteenrodError, ValueError):
    code = "InputError"


class MalformedSimplex(InputError):
    code = "MalformedSimplex"


class NotClosed(InputError):
    code = "NotClosed"


class Duplicate(InputError):
    code = "Duplicate"


class NotMember(InputError):
    code = "NotMember"


class NotSubset(InputError):
    code = "NotSubset"


class UnsupportedCochain(InputError):
    code = "UnsupportedCochain"


class InvalidK(InputError):
    code = "InvalidK"


class NotCocycle(InputError):
    code = "NotCocycle"


class DegreeMismatch(InputError):
    code = "DegreeMismatch"


class LengthMismatch(InputError):
    code = "LengthMismatch"


class StageOutOfRange(InputError):
    code = "StageOutOfRange"


class QueryOutOfRange(InputError):
    code = "QueryOutOfRange"


class ParseError(InputError):
    code = "ParseError"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class MixedDegrees(InputError):
    code = "MixedDegrees"


class MissingDegree(InputError):
    code = "MissingDegree"


class InconsistencyError(PersteenrodError, RuntimeError):
    code = "Inconsistency"


class InconsistentInput(InconsistencyError):
    code = "InconsistentInput"


class SolveFailed(InconsistencyError):
    code = "SolveFailed"
