"""Exception hierarchy.

Every error carries a short machine-readable ``code`` that the CLI copies
into its JSON output.
"""


class LNewtonError(Exception):
    code = "error"


class InvalidPrime(LNewtonError, ValueError):
    code = "invalid_prime"


class SizeExceeded(LNewtonError):
    code = "size_exceeded"


class InvalidSubfield(LNewtonError, ValueError):
    code = "invalid_subfield"


class ZeroArgument(LNewtonError, ValueError):
    code = "zero_argument"


class Unsupported(LNewtonError):
    code = "unsupported"


class PrimeMismatch(LNewtonError, ValueError):
    code = "prime_mismatch"


class NotIntegral(LNewtonError, ValueError):
    code = "not_integral"


class PrecisionExhausted(LNewtonError):
    code = "precision_exhausted"


class InvalidConstantTerm(LNewtonError, ValueError):
    code = "invalid_constant_term"


class NotInvertible(LNewtonError, ZeroDivisionError):
    code = "not_invertible"


class DegreeAnomaly(LNewtonError):
    code = "degree_anomaly"


class EmptyInput(LNewtonError, ValueError):
    code = "empty_input"


class NotDivisible(LNewtonError):
    code = "not_divisible"


class IdentityViolation(LNewtonError, AssertionError):
    code = "identity_violation"


class InvalidArgument(LNewtonError, ValueError):
    code = "invalid_argument"


class InternalError(LNewtonError):
    code = "internal_error"


class NotDiagonal(LNewtonError, ValueError):
    code = "not_diagonal"


class InsufficientTruncation(LNewtonError, ValueError):
    code = "insufficient_truncation"


class NotClosed(LNewtonError, ValueError):
    code = "not_closed"


class RegimeError(LNewtonError, ValueError):
    code = "regime_error"


class ImpossibleTerm(LNewtonError):
    code = "impossible_term"


class HypothesisFailed(LNewtonError):
    code = "hypothesis_failed"


class ParseError(LNewtonError, ValueError):
    code = "parse_error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
