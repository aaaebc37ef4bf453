import math

import pytest
from hypothesis import given, strategies as st

from offworld_energy.constants import CrewProfile, DietRow, MJ
from offworld_energy.errors import InvalidInputError
from offworld_energy.launch import MassDriverSpec, escape_velocity, launch_energy
from offworld_energy.life_support import crew_daily_energy, food_energy
from offworld_energy.power import PlantRequest, plant_area

pos = st.floats(min_value=1e-3, max_value=1e6)


def test_escape_velocity():
    assert escape_velocity(7.34e22, 1.731e6) == pytest.approx(2_380, rel=2e-3)
    assert escape_velocity(0.0, 1.731e6) == 0.0
    assert escape_velocity(4 * 7.34e22, 1.731e6) == pytest.approx(
        2 * escape_velocity(7.34e22, 1.731e6), rel=1e-15)
    with pytest.raises(InvalidInputError):
        escape_velocity(1.0, 0.0)


def test_launch_energy_examples():
    moon = MassDriverSpec(1.5, 2.0, 2440.0)
    mars = MassDriverSpec(1.5, 2.0, 5017.0)
    assert launch_energy(4e5, moon) / MJ == pytest.approx(3.573e6, rel=1e-3)
    assert launch_energy(4e5, mars) / MJ == pytest.approx(1.510e7, rel=1e-3)
    assert launch_energy(0.0, moon) == 0.0
    assert launch_energy(4e5, mars) / launch_energy(4e5, moon) == pytest.approx(
        (5017 / 2440) ** 2, rel=1e-14)


def test_mass_driver_invariants():
    for args in [(0.9, 2.0, 2440.0), (1.5, 0.5, 2440.0), (1.5, 2.0, 0.0)]:
        with pytest.raises(InvalidInputError):
            MassDriverSpec(*args)


@given(m=pos, v=pos, k=st.floats(min_value=0.1, max_value=10))
def test_launch_linear_and_quadratic(m, v, k):
    spec = MassDriverSpec(1.5, 2.0, v)
    e = launch_energy(m, spec)
    assert launch_energy(k * m, spec) == pytest.approx(k * e, rel=1e-12)
    assert launch_energy(m, MassDriverSpec(1.5, 2.0, k * v)) == pytest.approx(k * k * e,
                                                                               rel=1e-12)


def test_plant_area_examples():
    assert plant_area(PlantRequest(1.89e13, 1360, 86_400, 1.0)) == pytest.approx(1.608e5,
                                                                                 rel=1e-3)
    assert plant_area(PlantRequest(4.42e13, 544, 28_800, 1.0)) == pytest.approx(2.82e6,
                                                                                rel=2e-3)
    assert plant_area(PlantRequest(4.42e13, 544, 28_800, 0.45)) == pytest.approx(6.27e6,
                                                                                 rel=2e-3)


def test_plant_request_invariants():
    for args in [(0.0, 1360, 86_400, 1.0), (1e13, 0.0, 86_400, 1.0),
                 (1e13, 1360, 0.0, 1.0), (1e13, 1360, 86_400, 1.5)]:
        with pytest.raises(InvalidInputError):
            PlantRequest(*args)


@given(e=pos, ins=pos, day=st.floats(min_value=1.0, max_value=86_400.0),
       lam=st.floats(min_value=0.01, max_value=1.0))
def test_area_scaling(e, ins, day, lam):
    thermal = plant_area(PlantRequest(e, ins, day, 1.0))
    assert plant_area(PlantRequest(e, ins, day, lam)) == pytest.approx(thermal / lam, rel=1e-12)
    assert plant_area(PlantRequest(2 * e, ins, day, lam)) == pytest.approx(
        2 * plant_area(PlantRequest(e, ins, day, lam)), rel=1e-12)
    assert plant_area(PlantRequest(e, 2 * ins, day, 1.0)) == pytest.approx(thermal / 2,
                                                                          rel=1e-12)


def test_food_examples(registry):
    assert food_energy(registry.diet, 300, 2.0) / MJ == pytest.approx(10_062, rel=1e-4)
    assert food_energy((), 300, 2.0) == 0.0
    beef = [r for r in registry.diet if r.food == "beef"]
    assert food_energy(beef, 1, 1.0) / MJ == pytest.approx(6.336, rel=1e-9)


def test_crew_moon_table(registry):
    led = crew_daily_energy(registry.crew_for("moon"), registry.diet, registry.body("moon"))
    assert led.categories == ("oxygen", "electricity", "water", "food")
    assert led["oxygen"] / MJ == pytest.approx(16_676, rel=1e-3)
    assert led["electricity"] / MJ == pytest.approx(16_200, rel=1e-12)
    assert led["water"] / MJ == pytest.approx(32_400, rel=1e-12)
    assert led["food"] / MJ == pytest.approx(10_062, rel=1e-4)
    assert led.total / MJ == pytest.approx(75_339, rel=5e-4)
    assert led.total == math.fsum(v for _, v in led)


def test_crew_mars_total(registry):
    led = crew_daily_energy(registry.crew_for("mars"), registry.diet, registry.body("mars"))
    assert led.total / MJ == pytest.approx(69_950, rel=5e-4)


def test_crew_zero_headcount(registry):
    led = crew_daily_energy(CrewProfile(headcount=0), registry.diet)
    assert all(v == 0 for _, v in led)


@given(n=st.integers(min_value=0, max_value=10_000))
def test_crew_linear_in_headcount(registry, n):
    one = crew_daily_energy(CrewProfile(headcount=1), registry.diet)
    many = crew_daily_energy(CrewProfile(headcount=n), registry.diet)
    for (_, a), (_, b) in zip(one, many):
        assert b == pytest.approx(n * a, rel=1e-12, abs=1e-9)


def test_custom_diet_row():
    assert food_energy([DietRow("corn", 1e6, 0.5)], 2, 1.5) == pytest.approx(1.5e6)
