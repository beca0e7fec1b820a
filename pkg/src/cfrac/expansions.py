"""Named expansions and the certified evaluators built on them.

Gauss's continued fraction for the hyperbolic tangent,

    tanh z = z/(1 + z^2/(3 + z^2/(5 + ...))),

becomes an all-integer expansion at z = x/y after scaling every level by y:

    tanh(x/y) = x/(y + x^2/(3y + x^2/(5y + ...))).

Euler's pattern gives the simple continued fraction of e,

    e = 2 + 1/(1 + 1/(2 + 1/(1 + 1/(1 + 1/(4 + ...))))).

Exponentials of rationals are recovered through the identity
tanh r = (e^r - e^-r)/(e^r + e^-r), inverted to e^(2r) = (1 + tanh r)/(1 - tanh r)
and evaluated at the half argument r = x/(2y).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .core import (
    DEPTH_CAP,
    ApproximationResult,
    ClosedFormRule,
    ContinuedFraction,
    ConvergentState,
    EPatternRule,
    equivalence_transform,
    evaluate,
)
from .errors import DepthCapError, DomainError


def gauss_tanh_cf(z: Fraction) -> ContinuedFraction:
    """Gauss's expansion of tanh z: b_1 = z, b_i = z^2, a_i = 2i - 1.

    z must be a nonzero rational (tanh 0 = 0 makes the expansion degenerate).
    """
    z = Fraction(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    rule = ClosedFormRule(b_first=z, b_rest=z * z, a_slope=Fraction(2), a_intercept=Fraction(-1))
    return ContinuedFraction(Fraction(0), rule)


def tanh_integer_cf(x: int, y: int) -> ContinuedFraction:
    """The all-integer expansion of tanh(x/y): b_1 = x, b_i = x^2, a_i = (2i-1)y.

    Built by applying the equivalence transform with constant scale y to
    Gauss's expansion at z = x/y, which clears every rational term into a
    positive integer while preserving all convergents exactly.  Requires
    x >= 1 and y >= 1.
    """
    if x < 1 or y < 1:
        raise DomainError("x and y must be positive integers")
    return equivalence_transform(gauss_tanh_cf(Fraction(x, y)), Fraction(y))


def e_simple_cf() -> ContinuedFraction:
    """The simple continued fraction of e (leading 2, Euler's pattern)."""
    return ContinuedFraction(Fraction(2), EPatternRule())


def tanh_rational(
    x: int,
    y: int,
    tol: Fraction,
    max_depth: int = DEPTH_CAP,
) -> ApproximationResult:
    """tanh(x/y) for positive integers x, y, certified to within ``tol``.

    x/y is reduced first: the smaller partial numerators (x^2 after
    reduction) converge no slower and leave the value unchanged.
    """
    if x < 1 or y < 1:
        raise DomainError("x and y must be positive integers")
    g = gcd(x, y)
    return evaluate(tanh_integer_cf(x // g, y // g), tol, max_depth)


def exp_rational(
    x: int,
    y: int,
    tol: Fraction,
    max_depth: int = DEPTH_CAP,
) -> ApproximationResult:
    """e^(x/y) with a certified error bound at most ``tol``.

    Evaluates t = tanh(|x|/(2y)) from the integer-term expansion and forms
    (1 + t)/(1 - t); for x < 0 the reciprocal (1 - t)/(1 + t) is used, which
    is exact by e^-r = 1/e^r.  The doubled denominator keeps all terms
    integral and lands on e^(x/y) directly.

    The bound is exact interval propagation: with the true tanh inside
    [t - eps, t + eps] (bracketing of consecutive convergents), the image of
    that interval under (1 + u)/(1 - u) deviates from the returned value by
    at most 2*eps/((1 - t)(1 - t - eps)), and similarly on the reciprocal
    side.  The expansion is consumed until that propagated bound drops under
    ``tol``; the interval must also clear the u = 1 pole first, which it
    always does since tanh < 1.

    y must be >= 1; any integer x is accepted (x = 0 gives exactly 1).
    """
    if y < 1:
        raise DomainError("y must be a positive integer")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be > 0")
    if x == 0:
        return ApproximationResult(Fraction(1), Fraction(0), 0)

    negative = x < 0
    g = gcd(abs(x), 2 * y)
    cf = tanh_integer_cf(abs(x) // g, 2 * y // g)

    one = Fraction(1)
    state = ConvergentState.initial(cf.leading)
    prev = state.value
    best = None
    for i in range(1, max_depth + 1):
        state = state.step(cf.term(i))
        t = state.value
        eps = abs(t - prev)
        prev = t
        if t + eps >= 1:
            continue
        if negative:
            value = (one - t) / (one + t)
            bound = 2 * eps / ((one + t) * (one + t - eps))
        else:
            value = (one + t) / (one - t)
            bound = 2 * eps / ((one - t) * (one - t - eps))
        if bound <= tol:
            return ApproximationResult(value, bound, i)
        best = ApproximationResult(value, bound, i)
    raise DepthCapError(
        f"tolerance {tol} not reached within {max_depth} terms",
        best=best,
    )
