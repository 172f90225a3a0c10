"""Shared exception types."""


class CapacityError(Exception):
    """Raised when a subset-enumerating checker is given more vectors than
    the enumeration cutoff allows (the checks are exponential by nature)."""


class TheoremContradiction(Exception):
    """Raised when an internal consistency assertion backed by a proved
    theorem fails.  Seeing this exception means the implementation has a
    bug, never that the mathematics is wrong; it is always worth a report."""
