"""From slopes to Pythagorean triples and back.

A line of rational slope t through (-1, 0) meets the unit circle in one
more rational point; clearing denominators of that point yields a
primitive right triangle.  The slope can be read back off the triple, and
the two ways of assigning the legs give the two slopes t and (1-t)/(1+t).
"""

from fractions import Fraction

from secint.conics import (
    circle_from_B,
    enumerate_primitive_triples,
    parameter_from_triple,
    triple_from_parameter,
)

print("the first primitive triples, by hypotenuse:")
for triple in enumerate_primitive_triples(100):
    x, y, z = triple.as_tuple()
    t = parameter_from_triple(triple, (x, y))
    point = circle_from_B(t)
    print(
        f"  {x:3d}^2 + {y:3d}^2 = {z:3d}^2    "
        f"t = {str(t):>5}    circle point ({point.x}, {point.y})"
    )

print()
print("one triple, two slopes:")
triple = triple_from_parameter(2, 3)
for legs in [(5, 12), (12, 5)]:
    t = parameter_from_triple(triple, legs)
    point = circle_from_B(t)
    print(f"  legs {legs}: t = {t}, lands on ({point.x}, {point.y})")

print()
print("a slope with a common factor still gives a primitive triple:")
for a, b in [(1, 2), (1, 3), (3, 5)]:
    triple = triple_from_parameter(a, b)
    print(f"  t = {Fraction(a, b)} -> {triple.as_tuple()}")
