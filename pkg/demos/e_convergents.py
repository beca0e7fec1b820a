"""The simple continued fraction of e, step by step.

e = 2 + 1/(1 + 1/(2 + 1/(1 + 1/(1 + 1/(4 + ...))))): the partial
denominators run 1, 2, 1, 1, 4, 1, 1, 6, ... and every convergent is an
exact rational.  Consecutive convergents alternate around the limit, which
is what certifies the error bound during evaluation.
"""

from fractions import Fraction

from cfrac import convergents, e_simple_cf, evaluate, terms


def main():
    cf = e_simple_cf()

    print("partial denominators:", [int(t.a) for t in terms(cf, 12)])
    print()

    print("convergents (exact, reduced):")
    values = convergents(cf, 10)
    prev = cf.leading
    for n, value in enumerate(values, start=1):
        side = "above" if value > prev else "below"
        print(f"  c_{n:<2} = {str(value):>12}  ~ {float(value):.12f}   ({side} the previous one)")
        prev = value
    print()

    result = evaluate(cf, Fraction(1, 10**15))
    print(f"first convergent within 1e-15 of e: depth {result.depth}")
    print(f"  value = {result.value}")
    print(f"  certified two-sided bound = {result.error_bound} ~ {float(result.error_bound):.3e}")


if __name__ == "__main__":
    main()
