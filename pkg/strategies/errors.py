"""
Errors raised while building strategies and strategy profiles.
"""


class StrategyError(ValueError):
    """Base class for strategy problems."""


class StrategyParameterError(StrategyError):
    """A strategy was given parameters it cannot work with."""


class UnknownStrategyError(StrategyError):
    """No strategy is registered under the requested name."""


class MatchingError(StrategyError):
    """A matching is not a perfect matching on the roster."""
