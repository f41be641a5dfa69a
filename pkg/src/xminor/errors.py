"""Exception hierarchy shared by every module."""

from __future__ import annotations


class XMinorError(Exception):
    """Base class for all package errors."""


class InvalidArgument(XMinorError, ValueError):
    """An argument violates the operation's contract (unknown vertex, non-edge, ...)."""


class PreconditionError(XMinorError, ValueError):
    """A mathematical precondition does not hold, e.g. the root set is not connected enough."""


class ResourceLimit(XMinorError):
    """A brute-force routine was asked to run beyond its size guard."""


class ConstructionError(XMinorError, RuntimeError):
    """A generator produced a graph that fails its own published facts."""
