"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class RadalignError(Exception):
    """Base class for every error raised on purpose by this package."""

    exit_code = 2


class MalformedInputError(RadalignError, ValueError):
    """Input that cannot be parsed or that violates a data invariant."""

    exit_code = 1


class PreconditionError(RadalignError, ValueError):
    """Well-formed input on which the requested operation is undefined."""

    exit_code = 2


class IncomparableError(PreconditionError):
    """Two functionals change relative sign on the cone at hand."""


class PropertyCheckError(RadalignError):
    """A computed object failed an internal consistency check."""

    exit_code = 3
