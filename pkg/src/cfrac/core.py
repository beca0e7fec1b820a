"""Generalized continued fractions over exact rationals.

A generalized continued fraction is

    a0 + b1/(a1 + b2/(a2 + b3/(a3 + ...)))

with partial numerators b_i and partial denominators a_i.  An expansion is a
leading term a0 plus a deterministic 1-based term source ("rule"); rules may
be closed-form (a_i affine in i, b constant past the first term), an explicit
finite list, or the pattern of the simple continued fraction of e.

Convergents c_n are computed by the fundamental recurrence

    h_n = a_n * h_{n-1} + b_n * h_{n-2}
    k_n = a_n * k_{n-1} + b_n * k_{n-2}

with h_{-1} = 1, h_0 = a0, k_{-1} = 0, k_0 = 1, and c_n = h_n / k_n.  The
cross term D_n = h_n * k_{n-1} - h_{n-1} * k_n obeys D_n = -b_n * D_{n-1}
with D_0 = -1, so for positive terms consecutive convergents alternate around
the limit.  That bracketing is what makes |c_n - c_{n-1}| a certified
two-sided error bound during evaluation.

Everything here is a pure function over immutable values; expansions are safe
to share and evaluate concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import (
    DepthCapError,
    ExpansionExhaustedError,
    NonPositiveTermError,
    ZeroScaleError,
)

#: Default patience limit for tolerance-driven evaluation.
DEPTH_CAP = 10**6


@dataclass(frozen=True)
class Term:
    """One level of the fraction: partial denominator a, partial numerator b.

    b = 0 is excluded: a zero partial numerator truncates the fraction, which
    is represented by ending the term stream instead.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            raise ValueError("partial numerator must be nonzero")


@dataclass(frozen=True)
class ClosedFormRule:
    """a_i = a_slope*i + a_intercept; b_1 = b_first, b_i = b_rest for i >= 2."""

    b_first: Fraction
    b_rest: Fraction
    a_slope: Fraction
    a_intercept: Fraction

    def __post_init__(self):
        for name in ("b_first", "b_rest", "a_slope", "a_intercept"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def term(self, i: int) -> Term:
        a = self.a_slope * i + self.a_intercept
        b = self.b_first if i == 1 else self.b_rest
        return Term(a, b)


@dataclass(frozen=True)
class ExplicitListRule:
    """A finite stored term sequence; index past the end is an error."""

    terms: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, i: int) -> Term:
        if not 1 <= i <= len(self.terms):
            raise ExpansionExhaustedError(i, len(self.terms))
        return self.terms[i - 1]


@dataclass(frozen=True)
class EPatternRule:
    """Terms of the simple continued fraction of e past the leading 2.

    All partial numerators are 1; the partial denominators run
    1, 2, 1, 1, 4, 1, 1, 6, ...: a_i = 2(i+1)/3 at i = 2, 5, 8, ... and 1
    elsewhere (Euler's pattern).
    """

    def term(self, i: int) -> Term:
        a = 2 * (i + 1) // 3 if i % 3 == 2 else 1
        return Term(Fraction(a), Fraction(1))


@dataclass(frozen=True)
class ScaledRule:
    """Equivalence-transformed view of a base rule.

    a_i -> c_i * a_i and b_i -> c_i * c_{i-1} * b_i with c_0 = 1.  The scale
    function must be pure (the rule stays deterministic) and nonzero at every
    index; a zero scale is reported when the index is consumed.
    """

    base: "TermRule"
    scale: Callable[[int], Fraction]

    def _scale_at(self, i: int) -> Fraction:
        if i == 0:
            return Fraction(1)
        c = Fraction(self.scale(i))
        if c == 0:
            raise ZeroScaleError(i)
        return c

    def term(self, i: int) -> Term:
        base = self.base.term(i)
        c = self._scale_at(i)
        c_prev = self._scale_at(i - 1)
        return Term(c * base.a, c * c_prev * base.b)


TermRule = Union[ClosedFormRule, ExplicitListRule, EPatternRule, ScaledRule]


@dataclass(frozen=True)
class ContinuedFraction:
    """A leading term plus a term rule."""

    leading: Fraction
    rule: TermRule

    def __post_init__(self):
        object.__setattr__(self, "leading", Fraction(self.leading))

    def term(self, i: int) -> Term:
        return self.rule.term(i)


@dataclass(frozen=True)
class ConvergentState:
    """Rolling state (h_{n-1}, h_n, k_{n-1}, k_n) of the fundamental recurrence.

    For expansions with positive terms k_n stays nonzero at every depth, so
    ``value`` is always defined there.
    """

    index: int
    h_prev: Fraction
    h_curr: Fraction
    k_prev: Fraction
    k_curr: Fraction

    @classmethod
    def initial(cls, leading: Fraction) -> "ConvergentState":
        return cls(0, Fraction(1), Fraction(leading), Fraction(0), Fraction(1))

    def step(self, term: Term) -> "ConvergentState":
        return ConvergentState(
            self.index + 1,
            self.h_curr,
            term.a * self.h_curr + term.b * self.h_prev,
            self.k_curr,
            term.a * self.k_curr + term.b * self.k_prev,
        )

    @property
    def value(self) -> Fraction:
        return self.h_curr / self.k_curr

    @property
    def determinant(self) -> Fraction:
        """D_n = h_n k_{n-1} - h_{n-1} k_n; satisfies D_n = -b_n D_{n-1}, D_0 = -1."""
        return self.h_curr * self.k_prev - self.h_prev * self.k_curr


@dataclass(frozen=True)
class ApproximationResult:
    """A convergent with a proven two-sided error bound at the given depth."""

    value: Fraction
    error_bound: Fraction
    depth: int


def terms(cf: ContinuedFraction, count: int) -> list[Term]:
    """The first ``count`` terms of the expansion (errors if too short)."""
    return [cf.term(i) for i in range(1, count + 1)]


def convergents(cf: ContinuedFraction, depth: int) -> list[Fraction]:
    """Exact reduced convergents c_1 .. c_depth (leading term included).

    A finite expansion shorter than ``depth`` raises ExpansionExhaustedError.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    state = ConvergentState.initial(cf.leading)
    out = []
    for i in range(1, depth + 1):
        state = state.step(cf.term(i))
        out.append(state.value)
    return out


def evaluate(
    cf: ContinuedFraction,
    tol: Fraction,
    max_depth: int = DEPTH_CAP,
) -> ApproximationResult:
    """Evaluate until consecutive convergents agree to within ``tol``.

    Terms must be strictly positive as consumed (NonPositiveTermError
    otherwise): positivity makes consecutive convergents bracket the limit L,
    so |L - c_n| <= |c_n - c_{n-1}| and the returned ``error_bound`` is a true
    two-sided bound.

    A finite expansion that runs out before the tolerance is met equals its
    last convergent exactly and is returned with error_bound 0.  If the
    tolerance is still unmet after ``max_depth`` terms, DepthCapError is
    raised carrying the best result so far.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be > 0")
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    state = ConvergentState.initial(cf.leading)
    prev_value = state.value
    value = prev_value
    gap = Fraction(0)
    for i in range(1, max_depth + 1):
        try:
            term = cf.term(i)
        except ExpansionExhaustedError:
            return ApproximationResult(prev_value, Fraction(0), i - 1)
        if term.a <= 0 or term.b <= 0:
            raise NonPositiveTermError(i, term)
        state = state.step(term)
        value = state.value
        gap = abs(value - prev_value)
        if gap <= tol:
            return ApproximationResult(value, gap, i)
        prev_value = value
    raise DepthCapError(
        f"tolerance {tol} not reached within {max_depth} terms",
        best=ApproximationResult(value, gap, max_depth),
    )


Scales = Union[Fraction, int, Callable[[int], Fraction]]


def equivalence_transform(cf: ContinuedFraction, scales: Scales) -> ContinuedFraction:
    """Rescale terms without changing any convergent.

    With c_0 = 1 the new terms are a_i' = c_i * a_i and
    b_i' = c_i * c_{i-1} * b_i; every convergent of the result equals the
    corresponding convergent of the input as an exact rational.  ``scales``
    is either a single nonzero rational (constant c_i = c) or a pure function
    i -> c_i for i >= 1.

    A constant scale applied to a closed-form rule folds back into a
    closed-form rule (a_i stays affine in i, b stays constant past b_1), so
    integer-term families keep their closed form.  Zero scales are rejected:
    immediately for constants and explicit lists, at first use otherwise.
    """
    rule = cf.rule
    if callable(scales):
        scale_fn = lambda i: Fraction(scales(i))  # noqa: E731
    else:
        constant = Fraction(scales)
        if constant == 0:
            raise ZeroScaleError(1)
        if isinstance(rule, ClosedFormRule):
            folded = ClosedFormRule(
                b_first=constant * rule.b_first,
                b_rest=constant * constant * rule.b_rest,
                a_slope=constant * rule.a_slope,
                a_intercept=constant * rule.a_intercept,
            )
            return ContinuedFraction(cf.leading, folded)
        scale_fn = lambda i: constant  # noqa: E731

    if isinstance(rule, ExplicitListRule):
        scaled = []
        c_prev = Fraction(1)
        for i in range(1, len(rule) + 1):
            c = scale_fn(i)
            if c == 0:
                raise ZeroScaleError(i)
            base = rule.term(i)
            scaled.append(Term(c * base.a, c * c_prev * base.b))
            c_prev = c
        return ContinuedFraction(cf.leading, ExplicitListRule(tuple(scaled)))

    return ContinuedFraction(cf.leading, ScaledRule(rule, scale_fn))
