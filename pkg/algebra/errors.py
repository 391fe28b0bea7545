"""Exceptions shared by the polynomial substrate."""


class AlgebraError(Exception):
    """Base class for every error raised by the algebra layer."""


class ContextMismatchError(AlgebraError):
    """Raised when values from different computation contexts meet."""


class FieldMismatchError(ContextMismatchError):
    """Raised when coefficients from different ground fields are combined."""


class FieldDivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class NoHeadTermError(AlgebraError):
    """Raised when the head of the zero polynomial is requested."""


class DomainError(AlgebraError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""
