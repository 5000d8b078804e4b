"""The Mercator ordinate: the secant integral put to work.

The chart's defining property is that vertical stretch matches the
horizontal stretch sec(phi) at every latitude, which forces the ordinate
to be the integral of the secant.  The closed form and a straightforward
adaptive quadrature agree to the requested tolerance, and the ratio of
numeric stretch to sec(phi) stays within a hair of 1.
"""

import math

from secint.mercator import (
    GeoPoint,
    conformality_ratio,
    mercator_y,
    mercator_y_numeric,
    project,
)

print("latitude (deg)   closed form     quadrature      |difference|   stretch/sec")
for degrees in range(0, 85, 10):
    phi = math.radians(degrees)
    closed = mercator_y(phi)
    numeric = mercator_y_numeric(phi, 1e-10)
    ratio = conformality_ratio(phi, 1e-4) if degrees < 84 else float("nan")
    print(
        f"  {degrees:12d}   {closed:12.8f}   {numeric:12.8f}   "
        f"{abs(closed - numeric):.1e}       {ratio:.8f}"
    )

print()
print("a few cities, mapped (x = longitude, unit sphere):")
cities = [
    ("Quito", -0.1807, -78.4678),
    ("Lisbon", 38.7223, -9.1393),
    ("Reykjavik", 64.1466, -21.9426),
    ("Longyearbyen", 78.2232, 15.6267),
]
for name, lat_deg, lon_deg in cities:
    point = project(GeoPoint(math.radians(lon_deg), math.radians(lat_deg)))
    print(f"  {name:>12}: x = {point.x:+.4f}, y = {point.y:+.4f}")

print()
print("the ordinate outruns every bound as the pole approaches:")
for phi in [1.4, 1.5, 1.55, 1.57, 1.5707]:
    print(f"  phi = {phi:<7} y = {mercator_y(phi):9.4f}")
