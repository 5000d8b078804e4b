import math
import random

import pytest

from secint.errors import LatitudeOutOfRange, ToleranceNotMet
from secint.mercator import (
    GeoPoint,
    MapPoint,
    conformality_ratio,
    mercator_y,
    mercator_y_numeric,
    project,
)

LN_2_PLUS_SQRT3 = math.log(2 + math.sqrt(3))


def test_closed_form_pinned_values():
    assert mercator_y(0.0) == 0.0
    assert abs(mercator_y(math.pi / 3) - LN_2_PLUS_SQRT3) < 1e-12
    assert abs(mercator_y(-math.pi / 3) + LN_2_PLUS_SQRT3) < 1e-12


def test_closed_form_guard_band():
    mercator_y(1.5707963)  # still below the guard
    for phi in [1.57079633, math.pi / 2, 1.6, -1.6]:
        with pytest.raises(LatitudeOutOfRange):
            mercator_y(phi)


def test_oddness_to_machine_precision():
    rng = random.Random(11)
    for _ in range(100):
        phi = rng.uniform(-1.5707, 1.5707)
        assert abs(mercator_y(-phi) + mercator_y(phi)) <= 1e-14


def test_strictly_increasing_on_grid():
    grid = [-1.5 + 0.03 * k for k in range(101)]
    values = [mercator_y(phi) for phi in grid]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_numeric_matches_closed_form():
    assert mercator_y_numeric(0.0, 1e-10) == 0.0
    assert abs(mercator_y_numeric(math.pi / 3, 1e-10) - LN_2_PLUS_SQRT3) < 1e-9
    phi = 0.1
    while phi <= 1.5:
        err = abs(mercator_y_numeric(phi, 1e-10) - mercator_y(phi))
        assert err < 1e-9, (phi, err)
        phi = round(phi + 0.2, 10)


def test_numeric_odd_interval():
    assert abs(mercator_y_numeric(-1.2, 1e-10) - mercator_y(-1.2)) < 1e-9


def test_numeric_tolerance_scales():
    loose = abs(mercator_y_numeric(1.5, 1e-4) - mercator_y(1.5))
    assert loose < 10 * 1e-4


def test_numeric_validation():
    with pytest.raises(ValueError):
        mercator_y_numeric(0.5, 1e-14)
    with pytest.raises(ValueError):
        mercator_y_numeric(0.5, 1e-2)
    with pytest.raises(LatitudeOutOfRange):
        mercator_y_numeric(1.570796, 1e-8)


def test_numeric_panel_cap_near_pole():
    # Asking for 1e-13 a couple of microradians from the pole runs into
    # the roundoff floor of the halving estimate before the panel budget.
    with pytest.raises(ToleranceNotMet):
        mercator_y_numeric(math.pi / 2 - 2e-6, 1e-13)


def test_project():
    assert project(GeoPoint(0.3, 0.0)) == MapPoint(0.3, 0.0)
    p = project(GeoPoint(1.0, math.pi / 3))
    assert p.x == 1.0
    assert abs(p.y - LN_2_PLUS_SQRT3) < 1e-12
    doubled = project(GeoPoint(1.0, math.pi / 3), scale=2.0)
    assert doubled.x == 2.0
    assert abs(doubled.y - 2 * LN_2_PLUS_SQRT3) < 1e-12
    with pytest.raises(LatitudeOutOfRange):
        project(GeoPoint(0.0, 1.6))


def test_conformality_pinned():
    assert abs(conformality_ratio(0.5, 1e-4) - 1) < 1e-6
    assert abs(conformality_ratio(0.0, 1e-4) - 1) < 1e-8


def test_conformality_sweep():
    phi = -1.4
    while phi <= 1.4:
        assert abs(conformality_ratio(phi, 1e-4) - 1) < 1e-6, phi
        phi = round(phi + 0.05, 10)


def test_conformality_validation():
    with pytest.raises(ValueError):
        conformality_ratio(0.5, 1e-9)
    with pytest.raises(ValueError):
        conformality_ratio(0.5, 0.1)
    with pytest.raises(LatitudeOutOfRange):
        conformality_ratio(1.57, 1e-2)
