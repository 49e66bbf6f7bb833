"""Exception hierarchy shared by every module of the package."""


class BregkernError(Exception):
    """Base class for all errors raised by bregkern."""


class DomainError(BregkernError, ValueError):
    """A value lies outside the domain of a generator or coordinate chart.

    ``index`` is the offending input coordinate when it can be identified,
    otherwise ``None``.
    """

    def __init__(self, message, index=None):
        if index is not None:
            message = f"{message} (coordinate {index})"
        super().__init__(message)
        self.index = index


class ConversionError(BregkernError):
    """No registered conversion path between two coordinate systems."""

    def __init__(self, source, target, reason="no conversion path"):
        super().__init__(f"cannot convert {source} -> {target}: {reason}")
        self.source = source
        self.target = target


class ConvergenceError(BregkernError, ArithmeticError):
    """An iterative solver stopped without meeting its tolerance."""

    def __init__(self, message, iterations, last=None):
        super().__init__(f"{message} after {iterations} iterations")
        self.iterations = iterations
        self.last = last


class DegenerateError(BregkernError, ValueError):
    """A geometric construction is undefined for the given inputs."""


class ArgumentError(BregkernError, ValueError):
    """An argument is outside its documented range."""


class InputError(BregkernError, ValueError):
    """A user-supplied file could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)
        self.path = path
        self.line = line
