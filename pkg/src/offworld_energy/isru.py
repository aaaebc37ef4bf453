"""Resource-chain energy: water extraction, digging, haulage, ore sizing, refining."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, InvalidMaterialError
from .constants import MaterialProperties, ProcessParameters, default_registry


@dataclass(frozen=True)
class HaulTask:
    """Surface haul of ``payload_mass`` kg over ``distance`` m.

    ``purity`` is the payload fraction of what is carried, so the hauled
    mass is ``payload_mass / purity``. A ``movement_ratio`` of 1 means the
    vehicle drives the straight-line distance.
    """

    payload_mass: float
    purity: float
    distance: float
    friction_coeff: float
    movement_ratio: float
    gravity: float

    def __post_init__(self):
        if not 0 < self.purity <= 1:
            raise InvalidInputError("purity must lie in (0, 1]")
        if self.friction_coeff < 0 or self.distance < 0 or self.payload_mass < 0:
            raise InvalidInputError("mass, distance and friction must be >= 0")
        if self.movement_ratio < 1:
            raise InvalidInputError("movement ratio must be >= 1")


@dataclass(frozen=True)
class DigTask:
    payload_mass: float
    purity: float
    deposit_density: float   # [kg/m^3]
    dig_force: float         # [N]
    robot_area: float        # [m^2]
    movement_ratio: float
    friction_coeff: float
    gravity: float

    def __post_init__(self):
        if self.deposit_density <= 0 or self.robot_area <= 0:
            raise InvalidInputError("deposit density and robot area must be positive")
        if not 0 < self.purity <= 1:
            raise InvalidInputError("purity must lie in (0, 1]")
        if self.dig_force < 0 or self.payload_mass < 0 or self.friction_coeff < 0:
            raise InvalidInputError("mass, dig force and friction must be >= 0")


@dataclass(frozen=True)
class RefineTask:
    material: MaterialProperties
    mass: float
    include_recycled_water: bool = True

    def __post_init__(self):
        if self.mass < 0:
            raise InvalidInputError("mass must be >= 0")


def melt_ice_to_water(mass: float, ice_temp: float, out_temp: float,
                      ice: MaterialProperties | None = None,
                      water: MaterialProperties | None = None) -> float:
    """Warm ice from ``ice_temp`` to 0 degC, melt it, warm the water to ``out_temp`` [J]."""
    if mass < 0:
        raise InvalidInputError("mass must be >= 0")
    if not ice_temp <= 0 <= out_temp:
        raise InvalidInputError("need ice_temp <= 0 <= out_temp (degC)")
    reg = default_registry()
    ice = ice or reg.material("ice")
    water = water or reg.material("water")
    warm_ice = 0.0 - ice_temp
    warm_water = out_temp - 0.0
    return mass * (water.heat_capacity * warm_water + ice.melt_enthalpy
                   + ice.heat_capacity * warm_ice)


def dehydrate_regolith(water_mass: float, process: ProcessParameters | None = None,
                       water: MaterialProperties | None = None,
                       hydrate: MaterialProperties | None = None,
                       sand: MaterialProperties | None = None) -> float:
    """Release ``water_mass`` kg of water from MgCl2.6H2O-bearing regolith [J].

    Dehydration enthalpy of the hydrate plus sensible heating of water,
    hydrate and host sand from ambient to the release temperature.
    """
    if water_mass < 0:
        raise InvalidInputError("mass must be >= 0")
    reg = default_registry()
    p = process or reg.process
    water = water or reg.material("water")
    hydrate = hydrate or reg.material("hydrate")
    sand = sand or reg.material("sand")
    m = water_mass
    rise = p.dehydration_temperature - p.ambient_temperature
    sensible = (p.hydrate_water_heat_factor * water.heat_capacity * m
                + hydrate.heat_capacity * p.hydrate_heated_ratio * m
                + sand.heat_capacity * m * p.hydrate_sand_ratio)
    return p.dehydration_energy * m * p.hydrate_mass_ratio + rise * sensible


def haul_energy(task: HaulTask) -> float:
    """Rolling-friction work of a surface haul [J]."""
    t = task
    return (1.0 / t.purity) * t.payload_mass * t.gravity * t.friction_coeff \
        * t.distance * t.movement_ratio


def dig_energy(task: DigTask) -> float:
    """Excavation work: dig force plus friction, over the robot travel distance [J].

    Travel distance is the excavated volume divided by the robot footprint,
    doubled for the out-and-back trip.
    """
    t = task
    hauled = t.payload_mass / t.purity
    force = t.movement_ratio * t.dig_force + hauled * t.gravity * t.friction_coeff
    travel = hauled / t.deposit_density * (2.0 / t.robot_area)
    return force * travel


def rail_haul_energy(mass: float, carriage_overhead: float, friction: float,
                     distance: float, g: float) -> float:
    if carriage_overhead < 1:
        raise InvalidInputError("carriage overhead must be >= 1")
    if mass < 0 or friction < 0 or distance < 0 or g < 0:
        raise InvalidInputError("mass, friction, distance and g must be >= 0")
    return carriage_overhead * mass * g * friction * distance


def ore_mass_for_output(target_mass: float, extraction_eff: float,
                        ore_fraction: float) -> float:
    """Ore mass [kg] that yields ``target_mass`` kg of a metal."""
    if not 0 < extraction_eff <= 1 or not 0 < ore_fraction <= 1:
        raise InvalidInputError("efficiency and ore fraction must lie in (0, 1]")
    return target_mass / (extraction_eff * ore_fraction)


def refining_energy(task: RefineTask) -> float:
    """Refining energy of ``task.mass`` kg, optionally with recycled process water [J]."""
    mat = task.material
    if not mat.has_refining_data:
        raise InvalidMaterialError(f"material {mat.name!r} has no refining data")
    per_kg = mat.refine_energy
    if task.include_recycled_water:
        per_kg += mat.recycled_water_energy
    return task.mass * per_kg
