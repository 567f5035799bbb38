"""Exception types shared across the engine.

Every rejection raises a CalcError subclass carrying a machine-readable
``code`` so the CLI and service can map failures to exit codes and
structured error payloads without parsing message text.
"""

from __future__ import annotations


class CalcError(ValueError):
    """Invalid or out-of-domain input. Maps to exit code 1 / HTTP 400."""

    code = "validation"


class UnitError(CalcError):
    """Unknown unit identifier or category mismatch."""

    code = "unit"


class UnsolvableError(CalcError):
    """Inputs are individually valid but the problem has no solution
    (e.g. wind too strong to hold the requested course)."""

    code = "unsolvable"
