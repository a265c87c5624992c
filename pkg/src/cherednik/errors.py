"""Shared exception types."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (maps to CLI exit code 2)."""


class NonDivisibleError(ArithmeticError):
    """Exact polynomial division was requested but the remainder is nonzero.

    When this fires inside a Dunkl application or a closed-form product it
    signals a broken invariant, so the CLI treats it like InvariantViolation.
    """
