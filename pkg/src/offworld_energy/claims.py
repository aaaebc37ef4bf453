"""Check published figures against the engine.

Each fixture names a *computed path*: a key in :data:`COMPUTED_PATHS` whose
function returns the engine's value in the claim's units. A claim matches when
the relative deviation is within its tolerance. Discrepant claims are reported
as such; nothing is adjusted to make them agree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable, Mapping

from .constants import MJ, Registry, default_registry
from .errors import FixtureError
from .isru import DigTask, HaulTask, RefineTask, dig_energy, haul_energy, \
    melt_ice_to_water, dehydrate_regolith, ore_mass_for_output, rail_haul_energy, \
    refining_energy
from .launch import MassDriverSpec, escape_velocity, launch_energy
from .life_support import crew_daily_energy
from .power import PlantRequest, plant_area
from .scenario import (
    compare_ledgers, evaluate_construction, evaluate_operations,
    evaluate_rail_construction, make_scenario,
)

MATCH = "MATCH"
DISCREPANT = "DISCREPANT"

# daily demands the published plant sizes were computed for
MOON_PLANT_DEMAND = 1.89e7 * MJ
MARS_PLANT_DEMAND = 4.42e7 * MJ


@dataclass(frozen=True)
class PaperClaim:
    id: str
    description: str
    claimed_value: float
    units: str
    computed_path: str
    tolerance: float
    computed: float | None = None
    status: str | None = None

    @property
    def deviation(self) -> float | None:
        if self.computed is None:
            return None
        return (self.computed - self.claimed_value) / self.claimed_value


def _ilmenite_mass(reg: Registry) -> float:
    chain = reg.process.ore_chain("ilmenite")
    return ore_mass_for_output(1.0e5, chain.extraction_efficiency,
                               chain.metal_fractions["titanium"])


def _ilmenite_dig(reg: Registry) -> float:
    p, chain = reg.process, reg.process.ore_chain("ilmenite")
    return dig_energy(DigTask(_ilmenite_mass(reg), chain.deposit_purity, chain.density,
                              p.dig_force, p.robot_area, p.movement_ratio,
                              p.pit_friction, reg.body("moon").g)) / MJ


def _ilmenite_haul(reg: Registry) -> float:
    p, chain, moon = reg.process, reg.process.ore_chain("ilmenite"), reg.body("moon")
    return haul_energy(HaulTask(_ilmenite_mass(reg), chain.deposit_purity,
                                moon.pit_haul_distance, p.road_friction,
                                p.movement_ratio, moon.g)) / MJ


def _moon_processed_haul(mass: float, reg: Registry) -> float:
    moon = reg.body("moon")
    return haul_energy(HaulTask(mass, 1.0, moon.processed_haul_distance,
                                reg.process.road_friction, 1.0, moon.g)) / MJ


def _ice_overburden_haul(reg: Registry) -> float:
    p, moon = reg.process, reg.body("moon")
    return haul_energy(HaulTask(1.0e5, moon.water_ore_purity, moon.pit_haul_distance,
                                p.road_friction, p.movement_ratio, moon.g)) / MJ


def _ice_dig(reg: Registry) -> float:
    p, moon = reg.process, reg.body("moon")
    return dig_energy(DigTask(1.0e5, moon.water_ore_purity, moon.water_ore_density,
                              p.dig_force, p.robot_area, p.movement_ratio,
                              p.pit_friction, moon.g)) / MJ


def _rail(reg: Registry) -> float:
    p, moon = reg.process, reg.body("moon")
    return rail_haul_energy(1.0e5, p.rail_carriage_overhead, p.rail_friction,
                            moon.rail_distance, moon.g) / MJ


def _launch(body: str, reg: Registry) -> float:
    p = reg.process
    spec = MassDriverSpec(p.container_overhead, p.driver_efficiency_factor,
                          reg.body(body).escape_speed)
    return launch_energy(4.0e5, spec) / MJ


def _refine(material: str, reg: Registry) -> float:
    return refining_energy(RefineTask(reg.material(material), 1.0e5)) / MJ


def _crew(body: str, reg: Registry):
    return crew_daily_energy(reg.crew_for(body), reg.diet, reg.body(body), reg.constants)


def _area(body: str, demand: float, efficiency: float, reg: Registry) -> float:
    b = reg.body(body)
    return plant_area(PlantRequest(demand, b.insolation, b.daylight_per_day, efficiency)) / 1e6


def _ops(body: str, reg: Registry):
    return evaluate_operations(make_scenario(body, "human", registry=reg))


def _construction(body: str, crew: str, method: str, reg: Registry):
    return evaluate_construction(make_scenario(body, crew, method, registry=reg))


def _rail_construction(reg: Registry):
    return evaluate_rail_construction(make_scenario("moon", "robotic", registry=reg))


def _ops_excluding_driver_and_refining(reg: Registry) -> float:
    ops = _ops("moon", reg)
    return (ops.total - ops.group_total("mass_driver") - ops.group_total("refining")) / MJ


def _construction_ratio(reg: Registry) -> float:
    report = compare_ledgers(_construction("moon", "human", "conventional", reg),
                             _construction("moon", "robotic", "print3d", reg))
    return report.total.ratio


COMPUTED_PATHS: Mapping[str, Callable[[Registry], float]] = {
    "isru.rail_haul.moon_water": _rail,
    "isru.ore_mass.ilmenite_for_titanium": _ilmenite_mass,
    "isru.dig.ilmenite": _ilmenite_dig,
    "isru.haul.ilmenite_overburden": _ilmenite_haul,
    "isru.haul.metal_processed": lambda r: _moon_processed_haul(2.0e5, r),
    "isru.haul.ice_overburden": _ice_overburden_haul,
    "isru.haul.water_processed": lambda r: _moon_processed_haul(1.0e5, r),
    "isru.dig.ice": _ice_dig,
    "isru.extract.ice_to_water": lambda r: melt_ice_to_water(
        1.0e5, r.body("moon").ice_temperature, r.process.water_out_temperature,
        r.material("ice"), r.material("water")) / MJ,
    "isru.extract.hydrate": lambda r: dehydrate_regolith(
        1.0e5, r.process, r.material("water"), r.material("hydrate"),
        r.material("sand")) / MJ,
    "isru.refine.low_grade_steel": lambda r: _refine("low_grade_steel", r),
    "isru.refine.titanium": lambda r: _refine("titanium", r),
    "isru.refine.aluminium": lambda r: _refine("aluminium", r),
    "isru.refine.three_metals": lambda r: sum(
        _refine(m, r) for m in ("low_grade_steel", "titanium", "aluminium")),
    "ops.moon.water_chain": lambda r: _ops("moon", r).group_total("water") / MJ,
    "launch.escape.moon_derived": lambda r: escape_velocity(
        r.body("moon").body_mass, r.body("moon").body_radius, r.constants.G) / 1e3,
    "launch.energy.moon": lambda r: _launch("moon", r),
    "launch.energy.mars": lambda r: _launch("mars", r),
    "launch.ratio.mars_moon": lambda r: _launch("mars", r) / _launch("moon", r),
    "crew.moon.oxygen": lambda r: _crew("moon", r)["oxygen"] / MJ,
    "crew.moon.total": lambda r: _crew("moon", r).total / MJ,
    "crew.mars.total": lambda r: _crew("mars", r).total / MJ,
    "crew.moon.water": lambda r: _crew("moon", r)["water"] / MJ,
    "power.moon.thermal_km2": lambda r: _area(
        "moon", MOON_PLANT_DEMAND, r.process.solar_thermal_efficiency, r),
    "power.moon.pv_km2": lambda r: _area("moon", MOON_PLANT_DEMAND, r.process.pv_efficiency, r),
    "power.mars.thermal_km2": lambda r: _area(
        "mars", MARS_PLANT_DEMAND, r.process.solar_thermal_efficiency, r),
    "power.mars.pv_km2": lambda r: _area("mars", MARS_PLANT_DEMAND, r.process.pv_efficiency, r),
    "ops.moon.total": lambda r: _ops("moon", r).total / MJ,
    "ops.mars.total": lambda r: _ops("mars", r).total / MJ,
    "ops.moon.refining_share": lambda r: _ops("moon", r).share("refining"),
    "ops.moon.mass_driver_share": lambda r: _ops("moon", r).share("mass_driver"),
    "ops.mars.mass_driver_share": lambda r: _ops("mars", r).share("mass_driver"),
    "ops.ratio.mars_moon": lambda r: _ops("mars", r).total / _ops("moon", r).total,
    "ops.moon.excluding_driver_and_refining": _ops_excluding_driver_and_refining,
    "construction.ratio.human_conventional_over_robotic_print3d": _construction_ratio,
    "construction.ratio.rail_over_robotic_print3d_base": lambda r: (
        _rail_construction(r).total / _construction("moon", "robotic", "print3d", r).total),
    "construction.ratio.rail_over_human_conventional_base": lambda r: (
        _rail_construction(r).total / _construction("moon", "human", "conventional", r).total),
    "construction.ratio.mars_over_moon_robotic_print3d": lambda r: (
        _construction("mars", "robotic", "print3d", r).total
        / _construction("moon", "robotic", "print3d", r).total),
    "construction.moon.refinery_share": lambda r: _construction(
        "moon", "robotic", "print3d", r).share("refinery_dome"),
}


def load_default_fixtures() -> list[dict]:
    text = resources.files("offworld_energy").joinpath("data/claims.json").read_text("utf-8")
    return json.loads(text)


_FIXTURE_KEYS = {"id", "description", "claimed_value", "units", "computed_path", "tolerance"}


def verify_paper_claims(fixtures: Iterable[Mapping] | None = None,
                        registry: Registry | None = None) -> list[PaperClaim]:
    """Evaluate each fixture; ``None`` uses the shipped fixture set."""
    reg = registry or default_registry()
    if fixtures is None:
        fixtures = load_default_fixtures()
    out = []
    for fx in fixtures:
        if set(fx) != _FIXTURE_KEYS:
            raise FixtureError(f"fixture {fx.get('id', '?')!r}: expected keys {sorted(_FIXTURE_KEYS)}")
        fn = COMPUTED_PATHS.get(fx["computed_path"])
        if fn is None:
            raise FixtureError(f"fixture {fx['id']!r}: unknown computed path "
                               f"{fx['computed_path']!r}")
        computed = float(fn(reg))
        claimed = float(fx["claimed_value"])
        tol = float(fx["tolerance"])
        status = MATCH if abs(computed - claimed) <= tol * abs(claimed) else DISCREPANT
        out.append(PaperClaim(id=fx["id"], description=fx["description"],
                              claimed_value=claimed, units=fx["units"],
                              computed_path=fx["computed_path"], tolerance=tol,
                              computed=computed, status=status))
    return out
