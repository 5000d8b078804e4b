"""Shared test utilities: small random expression generators and stencils."""

from __future__ import annotations

import random

from secint.ratfunc import Polynomial
from secint.trig import TrigPolynomial, TrigRational, canonicalize


def random_cos_polynomial(
    rng: random.Random, max_degree: int = 2, bound: int = 3
) -> Polynomial:
    degree = rng.randint(0, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(degree + 1)]
    return Polynomial.from_coefficients(coeffs, var="c")


def random_trig_polynomial(
    rng: random.Random, max_degree: int = 2, bound: int = 3
) -> TrigPolynomial:
    return TrigPolynomial(
        random_cos_polynomial(rng, max_degree, bound),
        random_cos_polynomial(rng, max_degree, bound),
    )


def random_trig_rational(
    rng: random.Random, max_degree: int = 2, bound: int = 3
) -> TrigRational:
    num = random_trig_polynomial(rng, max_degree, bound)
    while True:
        den = random_trig_polynomial(rng, max_degree, bound)
        if not den.is_zero():
            return canonicalize(num, den)


def fourth_order_diff(f, x: float, h: float = 1e-5) -> float:
    """Fourth-order central difference approximation of f'(x)."""
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)
