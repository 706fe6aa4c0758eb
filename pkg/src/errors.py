"""
Exception hierarchy for the finite-field hypergeometric library.

Every domain error is a ValueError, so callers that already guard
configuration and input with `except ValueError` keep working.
"""


class FiniteHgfError(ValueError):
    """Base class of all domain errors."""


class NotPrimeError(FiniteHgfError):
    pass


class InvalidFieldError(FiniteHgfError):
    """A field spec that does not resolve to a prime power."""


class FieldTooLargeError(FiniteHgfError):
    pass


class ReducibleModulusError(FiniteHgfError):
    pass


class NoGeneratorError(FiniteHgfError):
    """Raised when no element of order q-1 exists; a broken table invariant."""


class LogOfZeroError(FiniteHgfError):
    pass


class NotCoprimeError(FiniteHgfError):
    pass


class NotDivisorError(FiniteHgfError):
    pass


class NotInSubfieldError(FiniteHgfError):
    pass


class NoSuchCharacterError(FiniteHgfError):
    pass


class FieldMismatchError(FiniteHgfError):
    pass


class EvenCharacteristicError(FiniteHgfError):
    pass


class XEqualsOneError(FiniteHgfError):
    pass


class UnknownIdentityError(FiniteHgfError):
    pass


class HypothesisViolatedError(FiniteHgfError):
    """A closed form was asked for outside its hypothesis domain."""

    def __init__(self, clause: str):
        super().__init__(f"Hypothesis violated: {clause}")
        self.clause = clause


class ParseError(FiniteHgfError):
    """Malformed element, character or parameter-set syntax."""

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(
            f"Cannot parse '{text}' at position {position}: {reason}")
        self.text = text
        self.position = position
        self.reason = reason


class CycloDivisionByZero(ZeroDivisionError):
    pass
