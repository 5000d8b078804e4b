"""Three projections, one family of points.

The circle can be swept by lines through (-1, 0) (parameter t) or through
(0, 1) (parameter s); the hyperbola x^2 - y^2 = 1 by lines through its
ideal point along y = -x (parameter u).  Converting parameters with
s = (1+t)/(1-t) and s = u makes all three land on matched points, and the
matching survives the trip into floating point as the identity
tan(theta/2 + pi/4) = sec(theta) + tan(theta).
"""

import math
from fractions import Fraction

from secint.conics import (
    ConicParameter,
    ParameterKind,
    circle_from_B,
    circle_from_D,
    hyperbola_from_Pplus,
    param_convert,
    projection_coincidence_residual,
)

print("matched parameters, matched points:")
for numerator, denominator in [(1, 2), (2, 3), (-1, 4), (5, 7)]:
    t = Fraction(numerator, denominator)
    s = param_convert(ConicParameter(ParameterKind.T, t), "s").value
    b_point = circle_from_B(t)
    d_point = circle_from_D(s)
    assert b_point == d_point
    hyper = hyperbola_from_Pplus(s)
    assert hyper.x * d_point.x == 1
    print(
        f"  t = {str(t):>4}  s = {str(s):>4}   circle ({b_point.x}, {b_point.y})"
        f"   hyperbola x = {hyper.x} (reciprocal of the cosine)"
    )

print()
print("the same coincidence in floating point:")
for theta in [0.0, math.pi / 6, 0.8, 1.2, 1.4]:
    residual = projection_coincidence_residual(theta)
    print(
        f"  theta = {theta:6.3f}:  "
        f"|tan(theta/2 + pi/4) - (sec + tan)(theta)| = {residual:.2e}"
    )

print()
print("conversion table from t = 1/3:")
start = ConicParameter(ParameterKind.T, Fraction(1, 3))
for target in ParameterKind:
    converted = param_convert(start, target)
    print(f"  {target.value}: {converted.value}")
