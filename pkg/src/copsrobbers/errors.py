"""Shared exception types."""


class CopsRobbersError(Exception):
    """Base class for errors raised by this package."""


class ParseError(CopsRobbersError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoPathError(CopsRobbersError):
    """Requested a path between vertices in different components."""


class StrategyFault(CopsRobbersError):
    """A strategy returned an illegal or nondeterministic move."""

    def __init__(self, agent, round_, message):
        self.agent = agent
        self.round = round_
        super().__init__(f"{agent} strategy fault at round {round_}: {message}")


class ResourceLimitError(CopsRobbersError):
    """The configured state/subset budget would be exceeded; never a wrong answer."""
