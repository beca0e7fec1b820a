"""Machine-checkable irrationality certificates for tanh(x/y) and e^(x/y).

The classical tail criterion due to Legendre: if every a_i and b_i of

    b1/(a1 + b2/(a2 + b3/(a3 + ...)))

is a positive integer and a_i > b_i for all i beyond some index n, the value
of the fraction is irrational.  For the integer expansion of tanh(x/y) the
partial denominators (2i-1)y grow linearly while the partial numerators sit
at x^2 from the second term on, so the hypothesis holds from the computable
index below; tanh(x/y) is therefore irrational, and because a rational e^(x/y)
would force tanh(x/y) = (e^(x/y) - e^(-x/y))/(e^(x/y) + e^(-x/y)) to be
rational too, e^(x/y) is irrational as well.

Only the sufficient direction is certified.  When the hypothesis fails
(e.g. the simple continued fraction of e itself, where a_i = b_i = 1
infinitely often yet e is irrational) nothing is asserted: the verdict
vocabulary has no "rational" arm.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from math import floor, gcd

from .core import ClosedFormRule, ContinuedFraction
from .errors import DomainError, InvalidTermError, TailUnreachableError
from .expansions import tanh_integer_cf
from .rationals import is_integer

VERDICT_IRRATIONAL = "CertifiedIrrational"
VERDICT_NOT_APPLICABLE = "NotApplicable"

#: Terms explicitly re-checked past the tail index when emitting a certificate.
#: The closed form covers the infinite tail; the scan exists to catch
#: implementation bugs, not mathematical ones.
CHECKED_PREFIX_MARGIN = 50

#: Confirmation scan width used by the tail-index computation itself.
SCAN_MARGIN = 10


@dataclass(frozen=True)
class TailArgument:
    """The closed-form inequality behind a certificate.

    a_slope*i + a_intercept > b_constant holds for every i >= threshold_index,
    and fails at threshold_index - 1 whenever that index is >= 2.
    """

    a_slope: int
    a_intercept: int
    b_constant: int
    threshold_index: int


@dataclass(frozen=True)
class IrrationalityCertificate:
    """Evidence that tanh(rx/ry) and e^(rx/ry) are irrational.

    (reduced_x, reduced_y) is the gcd-reduced pair (|x|, y) actually expanded;
    tail_index is the smallest n with a_i > b_i for all i > n;
    threshold_index = tail_index + 1 is where the closed-form inequality
    starts holding permanently; checked_prefix_depth is how far the term
    stream was explicitly re-verified at emission.
    """

    x: int
    y: int
    reduced_x: int
    reduced_y: int
    tail_index: int
    checked_prefix_depth: int
    threshold_index: int
    verdict: str

    def tail_argument(self) -> TailArgument | None:
        """The inequality record (2i-1)*ry > rx^2, or None when not applicable."""
        if self.verdict != VERDICT_IRRATIONAL:
            return None
        return TailArgument(
            a_slope=2 * self.reduced_y,
            a_intercept=-self.reduced_y,
            b_constant=self.reduced_x * self.reduced_x,
            threshold_index=self.threshold_index,
        )

    def statement(self) -> str:
        """Human-readable claim covered by this certificate."""
        if self.verdict != VERDICT_IRRATIONAL:
            return f"e^({self.x}/{self.y}) = 1 is rational; the criterion does not apply"
        ratio = f"{self.reduced_x}/{self.reduced_y}"
        power = "e" if self.reduced_x == self.reduced_y == 1 else f"e^({ratio})"
        return f"tanh({ratio}) is irrational, hence {power} is irrational"


@dataclass(frozen=True)
class VerificationOutcome:
    """Boolean verdict plus the reason and violated index on failure."""

    ok: bool
    reason: str | None = None
    failed_index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_integer_positive(term, i: int) -> tuple[int, int]:
    if not (is_integer(term.a) and is_integer(term.b)):
        raise InvalidTermError(f"term {i} is not integral: a={term.a}, b={term.b}", index=i)
    a, b = int(term.a), int(term.b)
    if a < 1 or b < 1:
        raise InvalidTermError(f"term {i} is not positive: a={a}, b={b}", index=i)
    return a, b


def legendre_tail_index(cf: ContinuedFraction) -> int:
    """Smallest n >= 1 such that a_i > b_i for every i > n.

    Requires a closed-form rule with integer coefficients, positive a-slope,
    and positive constant b past the first term: the linear a_i then
    eventually dominates the constant b_i, and the threshold is computed
    symbolically.  The result is confirmed by scanning the terms up to
    n + 10 (positivity, integrality, the inequality itself, and minimality
    of n).
    """
    rule = cf.rule
    if not isinstance(rule, ClosedFormRule):
        raise DomainError("tail index needs a closed-form term rule")
    coeffs = (rule.b_first, rule.b_rest, rule.a_slope, rule.a_intercept)
    if not all(is_integer(c) for c in coeffs):
        raise InvalidTermError(f"rule coefficients are not integers: {coeffs}")
    if rule.a_slope <= 0:
        raise TailUnreachableError(
            "partial denominators do not grow; the tail condition can never hold"
        )
    if rule.b_first < 1 or rule.b_rest < 1 or rule.a_slope + rule.a_intercept < 1:
        raise InvalidTermError("expansion has a nonpositive term")

    # Smallest integer i with a_slope*i + a_intercept > b_rest, clamped to
    # start no earlier than i = 2 (the first index ever constrained by a
    # tail at n >= 1); n is one below that threshold.
    quotient = (rule.b_rest - rule.a_intercept) / rule.a_slope
    n = max(1, floor(quotient))

    for i in range(1, n + SCAN_MARGIN + 1):
        a, b = _check_integer_positive(rule.term(i), i)
        if i > n and not a > b:
            raise InvalidTermError(f"a_{i} = {a} <= b_{i} = {b} inside the certified tail", index=i)
        if i == n and n >= 2 and a > b:
            raise InvalidTermError(f"tail index {n} is not minimal: a_{n} = {a} > b_{n} = {b}", index=i)
    return n


def certify_irrational(x: int, y: int) -> IrrationalityCertificate:
    """Emit a certificate for tanh(x/y) and e^(x/y).

    y must be >= 1.  x = 0 yields the NotApplicable verdict (e^0 = 1 is
    rational); a negative x is certified through |x|, since e^(-r) = 1/e^r
    preserves (ir)rationality.  The pair is gcd-reduced before expansion.
    """
    if y < 1:
        raise DomainError("y must be a positive integer")
    if x == 0:
        return IrrationalityCertificate(
            x=x, y=y, reduced_x=0, reduced_y=y,
            tail_index=0, checked_prefix_depth=0, threshold_index=0,
            verdict=VERDICT_NOT_APPLICABLE,
        )
    g = gcd(abs(x), y)
    rx, ry = abs(x) // g, y // g
    cf = tanh_integer_cf(rx, ry)
    n = legendre_tail_index(cf)
    checked = n + CHECKED_PREFIX_MARGIN
    for i in range(1, checked + 1):
        a, b = _check_integer_positive(cf.term(i), i)
        if i > n and not a > b:
            raise InvalidTermError(f"a_{i} = {a} <= b_{i} = {b} inside the certified tail", index=i)
    return IrrationalityCertificate(
        x=x, y=y, reduced_x=rx, reduced_y=ry,
        tail_index=n, checked_prefix_depth=checked, threshold_index=n + 1,
        verdict=VERDICT_IRRATIONAL,
    )


def verify_certificate(
    cert: IrrationalityCertificate,
    depth: int | None = None,
) -> VerificationOutcome:
    """Re-check a certificate from scratch.

    The certificate is re-derived from its (x, y) alone and must match
    field for field: emission is canonical, so any single-field tampering is
    detectable.  The term stream is then regenerated independently to
    ``depth`` (default: the certificate's checked prefix; must not be
    smaller) and every term is re-checked for positivity, integrality, and
    a_i > b_i past the tail index.

    Failures are reported in the outcome, never raised.
    """
    if depth is None:
        depth = cert.checked_prefix_depth
    if depth < cert.checked_prefix_depth:
        raise ValueError("depth must be >= the certificate's checked prefix depth")

    try:
        expected = certify_irrational(cert.x, cert.y)
    except (DomainError, InvalidTermError, TailUnreachableError) as exc:
        return VerificationOutcome(False, reason=str(exc))

    for field in fields(IrrationalityCertificate):
        got = getattr(cert, field.name)
        want = getattr(expected, field.name)
        if got != want:
            return VerificationOutcome(
                False,
                reason=f"{field.name} does not recompute: stored {got!r}, derived {want!r}",
            )

    if cert.verdict == VERDICT_NOT_APPLICABLE:
        return VerificationOutcome(True)

    cf = tanh_integer_cf(cert.reduced_x, cert.reduced_y)
    for i in range(1, depth + 1):
        try:
            a, b = _check_integer_positive(cf.term(i), i)
        except InvalidTermError as exc:
            return VerificationOutcome(False, reason=str(exc), failed_index=i)
        if i > cert.tail_index and not a > b:
            return VerificationOutcome(
                False,
                reason=f"a_{i} = {a} <= b_{i} = {b} inside the certified tail",
                failed_index=i,
            )
    return VerificationOutcome(True)
