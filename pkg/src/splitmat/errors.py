"""Exception types.

Every error raised by the library derives from :class:`SplitmatError` and
exposes a short ``code`` (the class name) which the command line surfaces
as a machine-parsable prefix.
"""


class SplitmatError(Exception):
    @property
    def code(self) -> str:
        return type(self).__name__


# field arithmetic / linear algebra
class NotPrime(SplitmatError, ValueError):
    pass


class ModulusMismatch(SplitmatError, ValueError):
    pass


class ZeroInverse(SplitmatError, ZeroDivisionError):
    pass


class EntryOutOfRange(SplitmatError, ValueError):
    pass


class DimensionMismatch(SplitmatError, ValueError):
    pass


class UnknownLabel(SplitmatError, KeyError):
    def __str__(self):
        # KeyError quotes its argument; keep messages plain
        return str(self.args[0]) if self.args else ""


class NotACircuit(SplitmatError, ValueError):
    pass


# matroid core
class HasLoop(SplitmatError, ValueError):
    def __init__(self, labels):
        self.labels = tuple(labels)
        super().__init__(f"loops: {', '.join(self.labels)}")


class HasColoop(SplitmatError, ValueError):
    def __init__(self, labels):
        self.labels = tuple(labels)
        super().__init__(f"coloops: {', '.join(self.labels)}")


class SizeLimitExceeded(SplitmatError, RuntimeError):
    pass


class GroundSetTooSmall(SplitmatError, ValueError):
    pass


# splitting
class InvalidSpec(SplitmatError, ValueError):
    pass


class LabelCollision(SplitmatError, ValueError):
    pass


# theorem checking
class PreconditionFailed(SplitmatError):
    pass


class InvalidDecomposition(SplitmatError, ValueError):
    pass


class FalsifiedTheorem(SplitmatError, AssertionError):
    """A verified hypothesis failed to imply its conclusion."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# file parsing
class ParseError(SplitmatError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
