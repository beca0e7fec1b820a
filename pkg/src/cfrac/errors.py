"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NonPositiveTermError(ValueError):
    """Evaluation consumed a term whose partial numerator or denominator is
    not strictly positive, so the bracketing error bound does not apply."""

    def __init__(self, index, term):
        super().__init__(
            f"term {index} is not positive: a={term.a}, b={term.b}"
        )
        self.index = index
        self.term = term


class DepthCapError(RuntimeError):
    """The tolerance was not reached within the depth cap.

    ``best`` holds the deepest approximation computed before giving up.
    """

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best


class ExpansionExhaustedError(LookupError):
    """A finite expansion has fewer terms than requested."""

    def __init__(self, index, length):
        super().__init__(
            f"term {index} requested but the expansion has only {length} terms"
        )
        self.index = index
        self.length = length


class ZeroScaleError(ValueError):
    """Equivalence scale factors must be nonzero."""

    def __init__(self, index):
        super().__init__(f"scale factor c_{index} is zero")
        self.index = index


class InvalidTermError(ValueError):
    """A term (or term-rule coefficient) violates the positive-integer
    requirement of the tail criterion."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class TailUnreachableError(ValueError):
    """The partial denominators never eventually dominate the partial
    numerators, so the tail criterion can never be satisfied."""


class CertificateFormatError(ValueError):
    """A serialized certificate is structurally malformed."""
