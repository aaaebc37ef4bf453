"""Scenario composition: construction and daily-operations budgets.

A :class:`ScenarioConfig` fixes a body, crew mode, construction method, export
manifest and the registry/catalog in force. The evaluators are pure: the same
config always yields the same ledger, bit for bit.
"""
from __future__ import annotations

import dataclasses
import math
from collections.abc import Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .constants import BodyProfile, OreChain, Registry, default_registry
from .construction import PRINT3D, ConstructionMethod, structure_construction_energy
from .errors import ConfigError, InvalidInputError
from .isru import (
    DigTask, HaulTask, RefineTask, dehydrate_regolith, dig_energy, haul_energy,
    melt_ice_to_water, ore_mass_for_output, rail_haul_energy, refining_energy,
)
from .launch import MassDriverSpec, launch_energy
from .ledger import EnergyLedger
from .life_support import crew_daily_energy
from .constants import POLAR_ICE
from .structures import StructureKind, StructureSpec, default_catalog

ROBOTIC = "robotic"
HUMAN = "human"
CREW_MODES = (ROBOTIC, HUMAN)

WATER = "water"
DEFAULT_MANIFEST = (
    (WATER, 1.0e5),
    ("low_grade_steel", 1.0e5),
    ("titanium", 1.0e5),
    ("aluminium", 1.0e5),
)


@dataclass(frozen=True)
class ScenarioConfig:
    """One trade-study case.

    ``include_rail`` defaults to whether the body has a rail line.
    ``export_manifest`` lists ``(material, kg/day)`` pairs in report order.
    """

    body: BodyProfile
    crew_mode: str = ROBOTIC
    method: ConstructionMethod = field(default_factory=ConstructionMethod)
    export_manifest: tuple[tuple[str, float], ...] = DEFAULT_MANIFEST
    include_rail: bool | None = None
    name: str = ""
    registry: Registry = field(default_factory=default_registry)
    structures: tuple[StructureSpec, ...] = field(default_factory=default_catalog)

    def __post_init__(self):
        if self.crew_mode not in CREW_MODES:
            raise InvalidInputError(f"unknown crew mode {self.crew_mode!r}")
        manifest = tuple((str(k), float(v)) for k, v in self.export_manifest)
        if any(v < 0 for _, v in manifest):
            raise InvalidInputError("manifest masses must be >= 0")
        if len({k for k, _ in manifest}) != len(manifest):
            raise InvalidInputError("manifest lists a material twice")
        object.__setattr__(self, "export_manifest", manifest)
        object.__setattr__(self, "structures", tuple(self.structures))
        if self.include_rail is None:
            object.__setattr__(self, "include_rail", self.body.rail_distance > 0)
        if not self.name:
            object.__setattr__(self, "name",
                               f"{self.body.name}-{self.crew_mode}-{self.method.variant}")

    @property
    def manifest(self) -> dict[str, float]:
        return dict(self.export_manifest)

    @property
    def export_mass(self) -> float:
        return math.fsum(v for _, v in self.export_manifest)


def make_scenario(body: str = "moon", crew_mode: str = ROBOTIC, method: str = PRINT3D,
                  registry: Registry | None = None, **kwargs) -> ScenarioConfig:
    """Build a scenario from names, using the default registry unless given."""
    registry = registry or default_registry()
    if method == "conventional":
        method = "steel_block"
    return ScenarioConfig(body=registry.body(body), crew_mode=crew_mode,
                          method=ConstructionMethod(variant=method),
                          registry=registry, **kwargs)


def builtin_scenarios(registry: Registry | None = None) -> dict[str, ScenarioConfig]:
    """The eight body x crew x method combinations, keyed by name."""
    out = {}
    for body in ("moon", "mars"):
        for crew in CREW_MODES:
            for method in ("print3d", "conventional"):
                name = f"{body}-{crew}-{method}"
                out[name] = make_scenario(body, crew, method, registry, name=name)
    return out


# ---------------------------------------------------------------- construction

def _base_structures(config: ScenarioConfig) -> list[StructureSpec]:
    return [s for s in config.structures
            if s.kind != StructureKind.SUPERCONDUCTIVE_RAIL
            and (config.crew_mode == HUMAN or not s.human_only)]


def evaluate_construction(config: ScenarioConfig) -> EnergyLedger:
    """Energy to build the base, one item per structure kind [J].

    Human-only rows are included for a human crew. The rail line is not part
    of the base; see :func:`evaluate_rail_construction`.
    """
    reg = config.registry
    sand, steel = reg.material("sand"), reg.material("steel")
    items = [(s.kind.value, structure_construction_energy(s, config.method, config.body,
                                                          sand, steel))
             for s in _base_structures(config)]
    return EnergyLedger(tuple(items))


def evaluate_rail_construction(config: ScenarioConfig) -> EnergyLedger:
    """Energy to build the rail line, always by printing; empty without a rail."""
    if not config.include_rail:
        return EnergyLedger()
    reg = config.registry
    printed = dataclasses.replace(config.method, variant=PRINT3D)
    items = [(s.kind.value, structure_construction_energy(s, printed, config.body,
                                                          reg.material("sand"),
                                                          reg.material("steel")))
             for s in config.structures if s.kind == StructureKind.SUPERCONDUCTIVE_RAIL]
    return EnergyLedger(tuple(items))


# ---------------------------------------------------------------- operations

def water_chain(config: ScenarioConfig, water_mass: float) -> list[tuple[str, float]]:
    """Dig, haul, optional rail, extraction and processed haul of the export water."""
    reg, body, p = config.registry, config.body, config.registry.process
    items = [
        ("water.dig", dig_energy(DigTask(
            payload_mass=water_mass, purity=body.water_ore_purity,
            deposit_density=body.water_ore_density, dig_force=p.dig_force,
            robot_area=p.robot_area, movement_ratio=p.movement_ratio,
            friction_coeff=p.pit_friction, gravity=body.g))),
        ("water.overburden_haul", haul_energy(HaulTask(
            payload_mass=water_mass, purity=body.water_ore_purity,
            distance=body.pit_haul_distance, friction_coeff=p.road_friction,
            movement_ratio=p.movement_ratio, gravity=body.g))),
    ]
    if config.include_rail:
        items.append(("water.rail", rail_haul_energy(
            water_mass, p.rail_carriage_overhead, p.rail_friction,
            body.rail_distance, body.g)))
    if body.water_source == POLAR_ICE:
        extraction = melt_ice_to_water(water_mass, body.ice_temperature,
                                       p.water_out_temperature,
                                       reg.material("ice"), reg.material(WATER))
    else:
        extraction = dehydrate_regolith(water_mass, p, reg.material(WATER),
                                        reg.material("hydrate"), reg.material("sand"))
    items.append(("water.extraction", extraction))
    items.append(("water.processed_haul", _processed_haul(config, water_mass)))
    return items


def _processed_haul(config: ScenarioConfig, mass: float) -> float:
    p = config.registry.process
    return haul_energy(HaulTask(payload_mass=mass, purity=1.0,
                                distance=config.body.processed_haul_distance,
                                friction_coeff=p.road_friction, movement_ratio=1.0,
                                gravity=config.body.g))


def ore_mass(chain: OreChain, manifest: Mapping[str, float]) -> float:
    """Ore the chain must supply: the largest demand over its co-extracted metals."""
    demands = [ore_mass_for_output(manifest[metal], chain.extraction_efficiency, frac)
               for metal, frac in chain.metal_fractions.items() if metal in manifest]
    return max(demands, default=0.0)


def metal_chain(config: ScenarioConfig, chain: OreChain) -> list[tuple[str, float]]:
    manifest = config.manifest
    body, p = config.body, config.registry.process
    ore = ore_mass(chain, manifest)
    metals = math.fsum(manifest[m] for m in chain.metal_fractions if m in manifest)
    prefix = f"metal.{chain.name}"
    return [
        (f"{prefix}.dig", dig_energy(DigTask(
            payload_mass=ore, purity=chain.deposit_purity, deposit_density=chain.density,
            dig_force=p.dig_force, robot_area=p.robot_area,
            movement_ratio=p.movement_ratio, friction_coeff=p.pit_friction,
            gravity=body.g))),
        (f"{prefix}.overburden_haul", haul_energy(HaulTask(
            payload_mass=ore, purity=chain.deposit_purity, distance=body.pit_haul_distance,
            friction_coeff=p.road_friction, movement_ratio=p.movement_ratio,
            gravity=body.g))),
        (f"{prefix}.processed_haul", _processed_haul(config, metals)),
    ]


def mass_driver_spec(config: ScenarioConfig) -> MassDriverSpec:
    p = config.registry.process
    return MassDriverSpec(container_overhead=p.container_overhead,
                          driver_efficiency_factor=p.driver_efficiency_factor,
                          launch_speed=config.body.escape_speed)


def evaluate_operations(config: ScenarioConfig) -> EnergyLedger:
    """Daily operating energy of the base [J/day].

    Categories: ``water``, ``metal``, ``refining``, ``mass_driver``, ``crew``
    and the flat ``facility_overhead``. Exported water is produced by the
    water chain; every other manifest entry is refined.
    """
    reg = config.registry
    manifest = config.manifest
    items: list[tuple[str, float]] = []
    items += water_chain(config, manifest.get(WATER, 0.0))
    for chain in reg.process.ore_chains:
        items += metal_chain(config, chain)
    for material, mass in config.export_manifest:
        if material == WATER:
            continue
        items.append((f"refining.{material}",
                      refining_energy(RefineTask(reg.material(material), mass))))
    items.append(("mass_driver", launch_energy(config.export_mass, mass_driver_spec(config))))
    crew = crew_daily_energy(reg.crew_for(config.body.name), reg.diet, config.body,
                             reg.constants)
    if config.crew_mode == ROBOTIC:
        crew = crew.scaled(0.0)
    items += [(f"crew.{k}", v) for k, v in crew]
    items.append(("facility_overhead", reg.process.facility_overhead))
    return EnergyLedger(tuple(items))


# ---------------------------------------------------------------- comparison

@dataclass(frozen=True)
class RatioRow:
    category: str
    a: float
    b: float
    ratio: float | None  # None when b is zero


@dataclass(frozen=True)
class RatioReport:
    a_name: str
    b_name: str
    rows: tuple[RatioRow, ...]
    total: RatioRow

    def ratio(self, category: str) -> float | None:
        for row in self.rows:
            if row.category == category:
                return row.ratio
        raise KeyError(category)


def _ratio(a: float, b: float) -> float | None:
    return a / b if b != 0 else None


def compare_ledgers(a: EnergyLedger, b: EnergyLedger, a_name: str = "a",
                    b_name: str = "b") -> RatioReport:
    """Element-wise and total ratios ``a / b`` over the union of categories."""
    order = list(a.categories) + [k for k in b.categories if k not in a.categories]
    rows = tuple(RatioRow(k, a.get(k), b.get(k), _ratio(a.get(k), b.get(k))) for k in order)
    total = RatioRow("total", a.total, b.total, _ratio(a.total, b.total))
    return RatioReport(a_name, b_name, rows, total)


def compare_scenarios(a: ScenarioConfig, b: ScenarioConfig,
                      kind: str = "operations") -> RatioReport:
    """How scenario ``a`` compares to ``b`` (ratios a/b) for one budget kind."""
    evaluate = EVALUATORS[kind]
    return compare_ledgers(evaluate(a), evaluate(b), a.name, b.name)


EVALUATORS: Mapping[str, Callable[[ScenarioConfig], EnergyLedger]] = {
    "construction": evaluate_construction,
    "rail": evaluate_rail_construction,
    "operations": evaluate_operations,
}


# ---------------------------------------------------------------- parameter paths

_REGISTRY_SECTIONS = ("constants", "bodies", "materials", "process", "diet")


def _entry_key(entry: Any) -> str | None:
    if isinstance(entry, StructureSpec):
        return entry.kind.value
    if dataclasses.is_dataclass(entry) and hasattr(entry, "name"):
        return entry.name
    if hasattr(entry, "food"):
        return entry.food
    return None


def _set_path(obj: Any, parts: Sequence[str], value: Any, path: str, numeric: bool) -> Any:
    if not parts:
        if numeric and (isinstance(obj, bool) or not isinstance(obj, (int, float))):
            raise ConfigError(f"parameter path {path!r} does not name a numeric field")
        if isinstance(obj, int) and not isinstance(obj, bool) and float(value).is_integer():
            return int(value)
        return value
    head, rest = parts[0], parts[1:]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        names = {f.name for f in dataclasses.fields(obj)}
        if head not in names:
            raise ConfigError(f"parameter path {path!r}: no field {head!r}")
        return dataclasses.replace(obj, **{head: _set_path(getattr(obj, head), rest,
                                                           value, path, numeric)})
    if isinstance(obj, Mapping):
        if head not in obj:
            raise ConfigError(f"parameter path {path!r}: no entry {head!r}")
        new = dict(obj)
        new[head] = _set_path(obj[head], rest, value, path, numeric)
        return new
    if isinstance(obj, tuple):
        for i, entry in enumerate(obj):
            if _entry_key(entry) == head:
                return obj[:i] + (_set_path(entry, rest, value, path, numeric),) + obj[i + 1:]
        raise ConfigError(f"parameter path {path!r}: no entry {head!r}")
    raise ConfigError(f"parameter path {path!r} descends into a scalar")


def apply_parameter(config: ScenarioConfig, path: str, value: Any,
                    numeric: bool = True) -> ScenarioConfig:
    """Return a copy of ``config`` with the field at dotted ``path`` set to ``value``.

    Recognised roots: ``body``, ``method``, ``manifest``, ``crew`` (the crew
    profile of the scenario body), ``structures`` (by kind), any registry
    section (``process``, ``materials``, ``constants``, ``bodies``, ``diet``),
    and the scalar scenario fields. Body changes are mirrored into the
    registry entry of the same name.
    """
    parts = path.split(".")
    head, rest = parts[0], parts[1:]
    if not path or not all(parts):
        raise ConfigError(f"malformed parameter path {path!r}")
    reg = config.registry
    if head == "manifest":
        if len(rest) != 1:
            raise ConfigError(f"parameter path {path!r}: expected manifest.<material>")
        manifest = list(config.export_manifest)
        for i, (k, _) in enumerate(manifest):
            if k == rest[0]:
                manifest[i] = (k, float(value))
                break
        else:
            manifest.append((rest[0], float(value)))
        return dataclasses.replace(config, export_manifest=tuple(manifest))
    if head == "crew":
        crew = _set_path(reg.crew_for(config.body.name), rest, value, path, numeric)
        new_crew = dict(reg.crew)
        new_crew[config.body.name] = crew
        return dataclasses.replace(config, registry=dataclasses.replace(reg, crew=new_crew))
    if head == "body":
        body = _set_path(config.body, rest, value, path, numeric)
        bodies = dict(reg.bodies)
        bodies[body.name] = body
        return dataclasses.replace(config, body=body,
                                   registry=dataclasses.replace(reg, bodies=bodies))
    if head in _REGISTRY_SECTIONS:
        new_reg = _set_path(reg, parts, value, path, numeric)
        body = new_reg.bodies.get(config.body.name, config.body)
        return dataclasses.replace(config, registry=new_reg, body=body)
    if head in ("method", "structures", "include_rail", "crew_mode"):
        return _set_path(config, parts, value, path, numeric)
    raise ConfigError(f"unknown parameter root in {path!r}")


def parameter_sweep(config: ScenarioConfig, path: str, values: Sequence[float],
                    evaluate: Callable[[ScenarioConfig], EnergyLedger] = evaluate_operations,
                    max_workers: int | None = None) -> list[tuple[float, EnergyLedger]]:
    """Evaluate ``config`` once per value of the parameter at ``path``.

    Rows come back in input order. With ``max_workers`` > 1 rows are
    evaluated on a thread pool; results are identical either way.
    """
    configs = [apply_parameter(config, path, v) for v in values]
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            ledgers = list(pool.map(evaluate, configs))
    else:
        ledgers = [evaluate(c) for c in configs]
    return list(zip(values, ledgers))
