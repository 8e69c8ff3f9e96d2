"""Exact arithmetic for generalized Cesaro operators.

Rational values are returned as ``fractions.Fraction``; rational arguments
accept ``int``, ``Fraction`` or a ``"p/q"`` string.
"""

from ._core import (
    AnsatzFailure,
    DomainError,
    closed_form_entry,
    corner,
    defect,
    entries,
    entry,
    hyponormality_range,
    p_entry,
    posinormal_range,
    psd,
    run_cli,
    telescope,
    verify,
)

__version__ = "1.0.0"

__all__ = [
    "AnsatzFailure",
    "DomainError",
    "closed_form_entry",
    "corner",
    "defect",
    "entries",
    "entry",
    "hyponormality_range",
    "p_entry",
    "posinormal_range",
    "psd",
    "run_cli",
    "telescope",
    "verify",
]
