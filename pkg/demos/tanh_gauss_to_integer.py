"""From Gauss's tanh expansion to an all-integer expansion of tanh(x/y).

Gauss: tanh z = z/(1 + z^2/(3 + z^2/(5 + ...))).  At z = x/y the terms are
rationals; rescaling every level by y (an equivalence transformation, which
changes no convergent) clears them into positive integers:

    tanh(x/y) = x/(y + x^2/(3y + x^2/(5y + ...)))

The integer form is what the irrationality criterion consumes.
"""

from fractions import Fraction

from cfrac import convergents, equivalence_transform, gauss_tanh_cf, tanh_integer_cf, terms


def show_terms(label, cf, count=4):
    pairs = [(str(t.b), str(t.a)) for t in terms(cf, count)]
    print(f"  {label}: " + ", ".join(f"(b={b}, a={a})" for b, a in pairs))


def main():
    x, y = 3, 2
    z = Fraction(x, y)

    rational_form = gauss_tanh_cf(z)
    integer_form = tanh_integer_cf(x, y)

    print(f"tanh({x}/{y}) two ways:")
    show_terms("Gauss terms at z = 3/2 ", rational_form)
    show_terms("after scaling by y = 2 ", integer_form)
    print()

    print("scaling is also exposed directly; any nonzero scales work:")
    wild = equivalence_transform(rational_form, lambda i: Fraction(i))
    show_terms("scaled by c_i = i       ", wild)
    print()

    print("none of this moves a single convergent:")
    for cf, label in ((rational_form, "rational"), (integer_form, "integer "), (wild, "c_i = i ")):
        values = convergents(cf, 6)
        print(f"  {label}: " + ", ".join(str(v) for v in values))

    assert convergents(rational_form, 30) == convergents(integer_form, 30) == convergents(wild, 30)
    print("\nfirst 30 convergents agree exactly across all three forms")


if __name__ == "__main__":
    main()
