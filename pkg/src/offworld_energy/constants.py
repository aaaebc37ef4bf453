"""Physical constants, body profiles, materials and process parameters.

Everything a formula needs is looked up here; the formula modules hold no
numeric literals of their own. All stored values are SI: joules, kilograms,
metres, seconds, kelvin. Heat capacities are J/(kg K), enthalpies and refining
energies are J/kg.

The default registry is built once and shared. It is immutable: overrides
produce a new registry through :func:`dataclasses.replace`.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .errors import RegistryError

KJ = 1.0e3
MJ = 1.0e6

POLAR_ICE = "polar_ice"
HYDRATES = "hydrates"
WATER_SOURCES = (POLAR_ICE, HYDRATES)


@dataclass(frozen=True)
class PhysicalConstants:
    G: float = 6.6743e-11                      # [m^3 kg^-1 s^-2]
    seconds_per_operating_day: float = 86_400.0  # budgets count per Earth-day
    joule_per_kwh: float = 3.6e6

    def __post_init__(self):
        if self.G <= 0:
            raise RegistryError("G must be positive")
        if self.seconds_per_operating_day != 86_400.0:
            raise RegistryError("operating day is fixed at 86,400 s")


@dataclass(frozen=True)
class BodyProfile:
    """Environment and logistics of one celestial body.

    ``escape_speed`` is stored rather than derived; see
    :func:`offworld_energy.launch.escape_velocity` for the derivation from
    mass and radius, which does not reproduce the stored lunar figure.
    ``water_ore_purity`` and ``water_ore_density`` describe the deposit the
    water is dug from (ice-bearing regolith or hydrated regolith).
    """

    name: str
    g: float                        # [m/s^2]
    body_mass: float                # [kg]
    body_radius: float              # [m]
    escape_speed: float             # [m/s]
    insolation: float               # [W/m^2]
    daylight_per_day: float         # [s]
    water_source: str
    ice_temperature: float          # [degC]
    pit_haul_distance: float        # [m]
    processed_haul_distance: float  # [m]
    rail_distance: float            # [m], 0 when there is no rail
    water_ore_purity: float         # water mass fraction of the dug deposit
    water_ore_density: float        # [kg/m^3]

    def __post_init__(self):
        if self.g <= 0 or self.insolation <= 0:
            raise RegistryError(f"{self.name}: g and insolation must be positive")
        if not 0 < self.daylight_per_day <= 86_400.0:
            raise RegistryError(f"{self.name}: daylight_per_day must lie in (0, 86400] s")
        if self.water_source not in WATER_SOURCES:
            raise RegistryError(f"{self.name}: unknown water source {self.water_source!r}")
        if self.water_source == HYDRATES and self.rail_distance != 0:
            raise RegistryError(f"{self.name}: hydrate bodies carry no rail (rail_distance = 0)")
        if not 0 < self.water_ore_purity <= 1 or self.water_ore_density <= 0:
            raise RegistryError(f"{self.name}: invalid water deposit description")
        for attr in ("body_mass", "body_radius", "escape_speed",
                     "pit_haul_distance", "processed_haul_distance", "rail_distance"):
            if getattr(self, attr) < 0:
                raise RegistryError(f"{self.name}: {attr} must be >= 0")


@dataclass(frozen=True)
class MaterialProperties:
    """Thermophysical and refining data for one material.

    ``refine_energy``, ``water_per_kg`` and ``recycled_water_energy`` are zero
    for materials that are only used structurally.
    """

    name: str
    density: float = 0.0                # [kg/m^3]
    heat_capacity: float = 0.0          # [J/(kg K)]
    melt_enthalpy: float = 0.0          # [J/kg]
    delta_T: float = 0.0                # [K] temperature rise to process
    refine_energy: float = 0.0          # [J/kg]
    water_per_kg: float = 0.0           # [L/kg]
    recycled_water_energy: float = 0.0  # [J/kg]

    def __post_init__(self):
        for f in dataclasses.fields(self):
            if f.name != "name" and getattr(self, f.name) < 0:
                raise RegistryError(f"{self.name}: {f.name} must be >= 0")

    @property
    def has_refining_data(self) -> bool:
        return self.refine_energy > 0


@dataclass(frozen=True)
class OreChain:
    """An ore deposit yielding one or more manifest metals.

    ``metal_fractions`` maps a manifest material to its mass fraction in the
    pure ore; ``deposit_purity`` is the ore fraction of what is dug.
    """

    name: str
    density: float
    deposit_purity: float
    extraction_efficiency: float
    metal_fractions: Mapping[str, float]

    def __post_init__(self):
        object.__setattr__(self, "metal_fractions",
                           MappingProxyType(dict(self.metal_fractions)))
        if self.density <= 0:
            raise RegistryError(f"ore {self.name}: density must be positive")
        if not 0 < self.deposit_purity <= 1 or not 0 < self.extraction_efficiency <= 1:
            raise RegistryError(f"ore {self.name}: purity and efficiency must lie in (0, 1]")
        if any(not 0 < v <= 1 for v in self.metal_fractions.values()):
            raise RegistryError(f"ore {self.name}: metal fractions must lie in (0, 1]")


@dataclass(frozen=True)
class ProcessParameters:
    """Coefficients of the excavation, haulage, launch and plant models.

    Friction coefficients are kept per context (prepared road, rough pit
    terrain, maglev rail) and are never shared between them.
    """

    # excavation and haulage
    road_friction: float = 0.01
    pit_friction: float = 0.1
    rail_friction: float = 0.005
    movement_ratio: float = 1.2
    dig_force: float = 3000.0            # [N]
    robot_area: float = 0.42             # [m^2]
    rail_carriage_overhead: float = 1.2
    water_out_temperature: float = 25.0  # [degC]
    # hydrate dehydration: per kg of water, 9.4/5 kg hydrate and 90.6/5 kg sand
    dehydration_energy: float = 138.0 * KJ   # [J/kg hydrate]
    hydrate_mass_ratio: float = 9.4 / 5
    hydrate_heated_ratio: float = 4.42 / 5
    hydrate_sand_ratio: float = 90.6 / 5
    hydrate_water_heat_factor: float = 2.0
    dehydration_temperature: float = 111.0   # [degC]
    ambient_temperature: float = 25.0        # [degC]
    ore_chains: tuple[OreChain, ...] = ()
    # mass driver
    container_overhead: float = 1.5
    driver_efficiency_factor: float = 2.0
    # solar plant
    solar_thermal_efficiency: float = 1.0
    pv_efficiency: float = 0.45
    # flat base-maintenance item; no published formula
    facility_overhead: float = 0.0           # [J/day]

    def ore_chain(self, name: str) -> OreChain:
        for chain in self.ore_chains:
            if chain.name == name:
                return chain
        raise RegistryError(f"unknown ore chain {name!r}")


@dataclass(frozen=True)
class CrewProfile:
    """Per-person daily life-support demand on one body.

    ``water_delta_per_person`` and ``food_delta_per_person`` are additive
    transport-cost corrections [J/person/day]; zero on the Moon.
    """

    headcount: int = 300
    o2_moles_per_person: float = 98.2           # [mol/day]
    o2_energy: float = 566.0 * KJ               # [J/mol]
    electricity_per_person: float = 15.0        # [kWh/day]
    water_per_person: float = 300.0             # [L/day]
    water_recycle_energy: float = 0.36 * MJ     # [J/L], i.e. 0.1 kWh/L
    waste_factor: float = 2.0
    water_delta_per_person: float = 0.0
    food_delta_per_person: float = 0.0

    def __post_init__(self):
        for f in dataclasses.fields(self):
            if getattr(self, f.name) < 0:
                raise RegistryError(f"crew: {f.name} must be >= 0")
        if self.waste_factor < 1:
            raise RegistryError("crew: waste_factor must be >= 1")


@dataclass(frozen=True)
class DietRow:
    food: str
    energy_per_kg: float   # [J/kg]
    kg_per_person: float   # [kg/day]

    def __post_init__(self):
        if self.energy_per_kg < 0 or self.kg_per_person < 0:
            raise RegistryError(f"diet row {self.food}: values must be >= 0")


@dataclass(frozen=True)
class Registry:
    """Immutable container for every constant used by the model."""

    constants: PhysicalConstants
    bodies: Mapping[str, BodyProfile]
    materials: Mapping[str, MaterialProperties]
    process: ProcessParameters = field(default_factory=ProcessParameters)
    crew: Mapping[str, CrewProfile] = field(default_factory=dict)
    diet: tuple[DietRow, ...] = ()

    def __post_init__(self):
        for name in ("bodies", "materials", "crew"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))
        object.__setattr__(self, "diet", tuple(self.diet))

    def body(self, name: str) -> BodyProfile:
        try:
            return self.bodies[name]
        except KeyError:
            raise RegistryError(f"unknown body {name!r}") from None

    def material(self, name: str) -> MaterialProperties:
        try:
            return self.materials[name]
        except KeyError:
            raise RegistryError(f"unknown material {name!r}") from None

    def crew_for(self, body: str) -> CrewProfile:
        try:
            return self.crew[body]
        except KeyError:
            raise RegistryError(f"no crew profile for body {body!r}") from None


def _default_bodies() -> dict[str, BodyProfile]:
    moon = BodyProfile(
        name="moon", g=1.62, body_mass=7.34e22, body_radius=1.731e6,
        escape_speed=2440.0, insolation=1360.0,
        daylight_per_day=86_400.0,  # crater-rim reflectors give 24 h of sunlight
        water_source=POLAR_ICE, ice_temperature=-150.0,
        pit_haul_distance=5000.0, processed_haul_distance=1000.0,
        rail_distance=1.0e6, water_ore_purity=0.9, water_ore_density=1000.0,
    )
    mars = BodyProfile(
        name="mars", g=3.7, body_mass=6.417e23, body_radius=3.3895e6,
        escape_speed=5017.0, insolation=544.0, daylight_per_day=8 * 3600.0,
        water_source=HYDRATES, ice_temperature=-150.0,
        pit_haul_distance=5000.0, processed_haul_distance=1000.0,
        # 90.6 % sand + 9.4 % MgCl2.6H2O gives ~5 % water by mass
        rail_distance=0.0, water_ore_purity=0.05, water_ore_density=1500.0,
    )
    return {moon.name: moon, mars.name: mars}


def _default_materials() -> dict[str, MaterialProperties]:
    mats = [
        MaterialProperties("sand", density=1500.0, heat_capacity=0.830 * KJ,
                           melt_enthalpy=156.0 * KJ, delta_T=1973.0),
        # melt enthalpy from a 1:1 magnetite/hematite feed
        MaterialProperties("steel", density=7750.0, heat_capacity=0.510 * KJ,
                           melt_enthalpy=25.23 * MJ, delta_T=1640.0),
        MaterialProperties("ice", density=1000.0, heat_capacity=2.108 * KJ,
                           melt_enthalpy=333.55 * KJ),
        MaterialProperties("water", density=1000.0, heat_capacity=4.200 * KJ,
                           refine_energy=16.0 * MJ),
        MaterialProperties("ilmenite", density=4800.0),
        MaterialProperties("hydrate", heat_capacity=0.756 * KJ),
        MaterialProperties("low_grade_steel", refine_energy=25.0 * MJ,
                           water_per_kg=23.0, recycled_water_energy=0.25 * MJ),
        MaterialProperties("stainless_steel", refine_energy=85.0 * MJ,
                           water_per_kg=112.0, recycled_water_energy=1.2 * MJ),
        MaterialProperties("titanium", refine_energy=120.0 * MJ,
                           water_per_kg=190.0, recycled_water_energy=2.1 * MJ),
        MaterialProperties("aluminium", refine_energy=138.0 * MJ,
                           water_per_kg=200.0, recycled_water_energy=2.1 * MJ),
    ]
    return {m.name: m for m in mats}


def _default_process() -> ProcessParameters:
    ilmenite = OreChain(
        name="ilmenite", density=4800.0, deposit_purity=0.8,
        extraction_efficiency=0.7,
        metal_fractions={"titanium": 0.316, "low_grade_steel": 0.37},
    )
    return ProcessParameters(ore_chains=(ilmenite,))


def _default_crew() -> dict[str, CrewProfile]:
    moon = CrewProfile()
    # less night-time heating on Mars; water/food deltas are transport costs
    mars = CrewProfile(electricity_per_person=10.0,
                       water_delta_per_person=10.0 * MJ / 300,
                       food_delta_per_person=2.0 * MJ / 300)
    return {"moon": moon, "mars": mars}


def _default_diet() -> tuple[DietRow, ...]:
    # production energy column read as MJ/kg
    rows = [
        ("corn", 1.1, 0.306),
        ("milk", 2.2, 0.18),
        ("fruits_vegetables", 4.4, 0.864),
        ("eggs", 8.36, 0.09),
        ("chicken", 8.8, 0.09),
        ("cheese", 17.6, 0.09),
        ("goat", 30.8, 0.09),
        ("beef", 70.4, 0.09),
    ]
    return tuple(DietRow(food, e * MJ, kg) for food, e, kg in rows)


def build_default_registry() -> Registry:
    """Construct a fresh default registry (not cached)."""
    return Registry(
        constants=PhysicalConstants(),
        bodies=_default_bodies(),
        materials=_default_materials(),
        process=_default_process(),
        crew=_default_crew(),
        diet=_default_diet(),
    )


@lru_cache(maxsize=1)
def default_registry() -> Registry:
    """The shared default registry with the published constants."""
    return build_default_registry()
