"""The rational-function stage of the pipeline, in isolation.

Hermite reduction strips repeated denominator factors without factoring
anything over an extension field; partial fractions handle what is left.
Because every coefficient is an exact fraction, the round trip
d/du (integral) = integrand is literal equality, not a tolerance check.
"""

from fractions import Fraction

from secint.integrate import (
    hermite_reduce,
    integrate_rational,
    partial_fractions,
    symbolic_derivative,
)
from secint.ratfunc import Polynomial, RationalFunction

u = Polynomial.variable("u")
one = RationalFunction.constant(Fraction(1), "u")

examples = [
    one / (u * u * (u - 1)),
    RationalFunction.from_polynomial(u + 1) / (u * u + 1),
    one / ((u - 1) * (u + 2) ** 2),
    RationalFunction.from_polynomial(u**4 + 1) / (u * u - 4),
    RationalFunction.from_polynomial(2 * u) / (u * u + 3) ** 2,
]

for f in examples:
    print(f"f(u) = {f}")
    rational_part, remainder = hermite_reduce(f)
    print(f"  hermite: rational part {rational_part}, remainder {remainder}")
    if not remainder.num.is_zero():
        pieces = partial_fractions(remainder)
        print(f"  partial fractions of the remainder: {len(pieces)} piece(s)")
    F = integrate_rational(f)
    print(f"  integral: {F}")
    assert symbolic_derivative(F) == f, "round trip must be exact"
    print("  d/du of the integral reproduces f exactly")
    print()
