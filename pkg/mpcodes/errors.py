"""
Exception hierarchy for MPC Codes.

The CLI maps each family to a stable exit code:
- ParseError          -> 2
- InvariantViolation  -> 3
- DecoderAssertionError and anything unexpected -> 4
"""


class MPCError(Exception):
    """Base class for all library errors."""


# ============================================================================
# Parse errors (exit 2)
# ============================================================================

class ParseError(MPCError, ValueError):
    """Malformed text input."""


class ElementParseError(ParseError):
    """Field element token does not follow `0 | 1 | a | a^k`."""


class PolynomialParseError(ParseError):
    """Polynomial text does not follow the term grammar."""


class WordParseError(ParseError):
    """Comma-separated word has the wrong shape."""


class CodeSpecParseError(ParseError):
    """Code-spec file is malformed."""

    def __init__(self, message: str, line_number: int = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


# ============================================================================
# Invariant violations (exit 3)
# ============================================================================

class InvariantViolation(MPCError, ValueError):
    """Input is well-formed but structurally invalid."""


class FieldConstructionError(InvariantViolation):
    """A Field could not be built from the given parameters."""


class ReducibleModulusError(FieldConstructionError):
    """The modulus factors over GF(p)."""


class NonPrimitiveModulusError(FieldConstructionError):
    """The modulus is irreducible but x does not generate the multiplicative group."""

    def __init__(self, message: str, order: int):
        self.order = order
        super().__init__(message)


class FieldMismatchError(InvariantViolation):
    """Operands belong to different fields or rings."""


class NonUnitError(InvariantViolation):
    """A ring element that must be a unit is not."""


class DimensionError(InvariantViolation):
    """Vector, message or matrix has the wrong shape."""


class NotNestedError(InvariantViolation):
    """Constituent codes are not nested C_1 > ... > C_s."""


class MatrixConditionError(InvariantViolation):
    """Matrix is not full rank, not NSC, or not unit by columns."""


class EnumerationCapExceeded(InvariantViolation):
    """Brute-force enumeration would exceed the configured cap."""


# ============================================================================
# Internal assertions (exit 4)
# ============================================================================

class DecoderAssertionError(MPCError, AssertionError):
    """A quantity the theory guarantees to be invertible was not."""
