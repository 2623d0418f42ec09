"""Exceptions raised by the peeling engine."""

from __future__ import annotations


class CapacityError(ValueError):
    """Coordinates exceed the supported integer range."""


class DegenerateInputError(ValueError):
    """Input is too degenerate for the requested computation."""
