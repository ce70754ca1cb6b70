"""Exception types raised by webtopo."""


class TopologyError(ValueError):
    """Base class for all errors raised by this package."""


class EmptyNetworkError(TopologyError):
    def __init__(self, message="empty network"):
        super().__init__(message)


class NoLinksError(TopologyError):
    def __init__(self, message="no links"):
        super().__init__(message)


class ParameterError(TopologyError):
    """Invalid generator or fitting parameters."""


class FitError(TopologyError):
    """Too few or degenerate points for a curve fit or comparison."""


class EdgeListFormatError(TopologyError):
    """A line of an edge-list file does not hold exactly two tokens."""

    def __init__(self, path, lineno, line):
        self.path = str(path)
        self.lineno = lineno
        self.line = line
        super().__init__(
            f"{self.path}:{lineno}: expected 2 tokens, got {len(line.split())}: {line!r}"
        )
