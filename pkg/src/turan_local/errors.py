"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TuranLocalError(Exception):
    """Base class for all errors raised by this package."""


class MalformedGraphError(TuranLocalError, ValueError):
    """Bad vertex index, self-loop, or otherwise invalid graph input."""


class DomainError(TuranLocalError, ValueError):
    """Numeric parameter outside the domain of a formula (e.g. r = 0)."""


class SizeLimitError(TuranLocalError, ValueError):
    """Graph too large for an exponential routine or a configured cap."""


class ContractError(TuranLocalError, ValueError):
    """Weights passed alongside a graph were not computed from that graph."""


class Graph6Error(TuranLocalError, ValueError):
    """graph6 text that cannot be decoded.

    ``offset`` is the 0-based byte position of the first offending byte.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
