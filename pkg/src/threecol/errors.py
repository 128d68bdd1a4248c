class UsageError(ValueError):
    """Invalid arguments or input supplied by the caller."""


class DimacsParseError(UsageError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ResourceLimitError(RuntimeError):
    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats
