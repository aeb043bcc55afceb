"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed graph text. ``line`` is 1-based, or None when not tied to a line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InfeasibleError(Exception):
    """No spanning tree satisfies the request.

    ``cycle`` holds the imposed edge ids forming a cycle, when that is the cause.
    ``components`` holds two representative nodes of disconnected components.
    ``step`` is the index into an imposition sequence that failed.
    """

    def __init__(self, message, cycle=None, components=None, step=None):
        super().__init__(message)
        self.cycle = cycle
        self.components = components
        self.step = step


class BudgetError(RuntimeError):
    """Brute-force enumeration exceeded its configured cap."""
