"""Exception types raised across the package."""

from __future__ import annotations


class NeutrosophyError(Exception):
    """Base class for every error raised by this package."""


class OutOfRange(NeutrosophyError, ValueError):
    """A value lies outside the closed non-standard unit range [0-, 1+]."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class EmptyInput(NeutrosophyError, ValueError):
    """An interval list with no intervals was given where one is required."""


class InvalidInterval(NeutrosophyError, ValueError):
    pass


class ParseError(NeutrosophyError, ValueError):
    """Base for text-literal errors; ``offset`` is a 0-based character index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.reason = message
        self.offset = offset


class LiteralSyntaxError(ParseError):
    pass


class EmptySubset(ParseError):
    pass


class ComponentError(ParseError):
    """A T, I or F component of a triple literal failed to parse."""

    def __init__(self, component: str, cause: NeutrosophyError, offset: int):
        reason = getattr(cause, "reason", str(cause))
        super().__init__(f"component {component}: {reason}", offset)
        self.component = component
        self.cause = cause


class UnknownElement(NeutrosophyError, KeyError):
    pass


class InvalidLabel(NeutrosophyError, ValueError):
    pass


class CorpusError(NeutrosophyError):
    """One or more records of an input file failed.

    ``problems`` is a list of ``(location, message)`` pairs, and ``records``
    holds whatever was classified successfully, in input order.
    """

    def __init__(self, problems, records=()):
        self.problems = list(problems)
        self.records = list(records)
        lines = "; ".join(f"{loc}: {msg}" for loc, msg in self.problems)
        super().__init__(f"{len(self.problems)} bad record(s): {lines}")
