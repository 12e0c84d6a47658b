"""Exception types shared across the package."""
from __future__ import annotations


class DspecError(Exception):
    """Base class for all errors raised by this package."""


class SpecSyntaxError(DspecError):
    """Input text does not match the grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class ArityError(DspecError):
    """A predicate symbol is used with two different arities."""


class GroundingError(DspecError):
    """A rule with variables cannot be grounded (empty universe)."""


class NotAnArgumentError(DspecError):
    """The support set does not derive the claimed conclusion."""


class ForeignRuleError(DspecError):
    """A support rule is not a ground instance of any defeasible rule."""


class ResourceCapError(DspecError):
    """An enumeration exceeded its configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap
