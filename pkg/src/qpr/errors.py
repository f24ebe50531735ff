"""Exception types shared across the package."""

from __future__ import annotations


class NotConvergedError(RuntimeError):
    """An iterative solver hit its step budget before meeting its tolerance.

    Carries the last iterate so callers can inspect or report partial
    results.  ``last`` is the most recent probability vector, ``steps`` the
    number of iterations performed.  Walk-based solvers additionally attach
    their full result object as ``result``.
    """

    def __init__(self, message, last=None, steps=None, result=None):
        super().__init__(message)
        self.last = last
        self.steps = steps
        self.result = result


class StateCorruptionError(RuntimeError):
    """A walk state violated an internal invariant (e.g. complex trace)."""
