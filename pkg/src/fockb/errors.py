"""Shared exception types.

Domain errors (bad arguments, broken invariants) raise plain ``ValueError``.
Operations that would exceed the hard enumeration / matrix-size bounds raise
``ResourceLimitError`` so callers (and the CLI) can tell the two apart.
"""


class ResourceLimitError(Exception):
    """Requested computation exceeds a hard size bound."""
