"""Exception types raised by the library and mapped to CLI exit codes."""


class GitFanError(Exception):
    pass


class DimensionMismatch(GitFanError, ValueError):
    pass


class DegenerateInput(GitFanError, ValueError):
    pass


class UnsupportedInput(GitFanError, ValueError):
    pass


class NotInSupport(GitFanError, ValueError):
    pass


class InvalidSpec(GitFanError, ValueError):
    pass


class InsufficientWitnessSet(GitFanError):
    def __init__(self, point, message=None):
        self.point = tuple(point)
        super().__init__(message or f"no witness orbit cone contains {format_vector(self.point)}")


class UnsupportedPlot(GitFanError, ValueError):
    pass


def format_vector(v):
    return "(" + ", ".join(str(x) for x in v) + ")"
