"""JSON scenario configuration.

A document has up to six top-level sections::

    {
      "bodies":    {"moon": {"rail_distance": 5e5}},
      "materials": {"titanium": {"refine_energy": 1.0e8}},
      "structures": {"refinery_dome": {"quantity": 4, "dims": {"outer_radius": 40}}},
      "crew":      {"moon": {"headcount": 100}},
      "diet":      [{"food": "corn", "energy_per_kg": 1.1e6, "kg_per_person": 0.3}],
      "scenarios": {"lean": {"body": "moon", "crew_mode": "robotic",
                             "method": "print3d",
                             "export_manifest": {"water": 5e4},
                             "overrides": {"process.pit_friction": 0.2}}}
    }

Entries patch the defaults field by field; new bodies and materials must give
every field. Values are SI, as in :mod:`offworld_energy.constants`. Unknown keys
anywhere are rejected.
"""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .constants import (
    BodyProfile, CrewProfile, DietRow, MaterialProperties, Registry, default_registry,
)
from .construction import ConstructionMethod
from .errors import ConfigError, ModelError
from .scenario import ScenarioConfig, apply_parameter, builtin_scenarios
from .structures import StructureKind, StructureSpec, default_catalog

SECTIONS = frozenset({"bodies", "materials", "structures", "crew", "diet", "scenarios"})
_SCENARIO_KEYS = frozenset({"body", "crew_mode", "method", "export_manifest",
                            "include_rail", "overrides"})


class ConfigReadError(ConfigError):
    """The configuration file is missing or is not valid JSON."""


class SchemaError(ConfigError):
    """The document parses but does not fit the schema."""


@dataclass(frozen=True)
class ConfigDocument:
    registry: Registry
    structures: tuple[StructureSpec, ...]
    scenarios: Mapping[str, ScenarioConfig]


def _field_names(cls) -> set[str]:
    return {f.name for f in dataclasses.fields(cls)}


def _check_keys(where: str, given: Mapping, allowed) -> None:
    if not isinstance(given, Mapping):
        raise SchemaError(f"{where}: expected an object")
    unknown = set(given) - set(allowed)
    if unknown:
        raise SchemaError(f"{where}: unknown keys {sorted(unknown)}")


def _patch(where: str, cls, current, patch: Mapping, name: str):
    allowed = _field_names(cls) - {"name"}
    _check_keys(where, patch, allowed)
    try:
        if current is None:
            return cls(name=name, **patch)
        return dataclasses.replace(current, **patch)
    except TypeError as exc:
        raise SchemaError(f"{where}: {exc}") from None
    except ModelError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _structures(patches: Mapping, catalog: tuple[StructureSpec, ...]) -> tuple[StructureSpec, ...]:
    kinds = {k.value for k in StructureKind}
    _check_keys("structures", patches, kinds)
    out = []
    for spec in catalog:
        patch = patches.get(spec.kind.value)
        if patch is None:
            out.append(spec)
            continue
        where = f"structures.{spec.kind.value}"
        _check_keys(where, patch, {"quantity", "steel_ratio", "dims"})
        dims = dict(spec.dims)
        if "dims" in patch:
            _check_keys(f"{where}.dims", patch["dims"], dims)
            dims.update(patch["dims"])
        new = StructureSpec(spec.kind, patch.get("quantity", spec.quantity), dims,
                            patch.get("steel_ratio", spec.steel_ratio))
        try:
            new.validate()
        except ModelError as exc:
            raise SchemaError(f"{where}: {exc}") from None
        out.append(new)
    return tuple(out)


def _scenario(name: str, spec: Mapping, registry: Registry,
              structures: tuple[StructureSpec, ...]) -> ScenarioConfig:
    where = f"scenarios.{name}"
    _check_keys(where, spec, _SCENARIO_KEYS)
    try:
        body = registry.body(spec.get("body", "moon"))
        method = spec.get("method", "print3d")
        if isinstance(method, str):
            method = ConstructionMethod(variant="steel_block" if method == "conventional"
                                        else method)
        else:
            _check_keys(f"{where}.method", method, _field_names(ConstructionMethod))
            method = dict(method)
            if method.get("variant") == "conventional":
                method["variant"] = "steel_block"
            method = ConstructionMethod(**method)
        kwargs: dict[str, Any] = {}
        if "export_manifest" in spec:
            manifest = spec["export_manifest"]
            if not isinstance(manifest, Mapping):
                raise SchemaError(f"{where}.export_manifest: expected an object")
            kwargs["export_manifest"] = tuple(manifest.items())
        if "include_rail" in spec:
            kwargs["include_rail"] = bool(spec["include_rail"])
        config = ScenarioConfig(body=body, crew_mode=spec.get("crew_mode", "robotic"),
                                method=method, name=name, registry=registry,
                                structures=structures, **kwargs)
        for path, value in spec.get("overrides", {}).items():
            config = apply_parameter(config, path, value, numeric=False)
    except SchemaError:
        raise
    except ModelError as exc:
        raise SchemaError(f"{where}: {exc}") from None
    return config


def parse_config(doc: Mapping, base: Registry | None = None) -> ConfigDocument:
    """Apply a parsed document to the defaults (or to ``base``)."""
    _check_keys("config", doc, SECTIONS)
    reg = base or default_registry()

    bodies = dict(reg.bodies)
    for name, patch in doc.get("bodies", {}).items():
        bodies[name] = _patch(f"bodies.{name}", BodyProfile, bodies.get(name), patch, name)
    materials = dict(reg.materials)
    for name, patch in doc.get("materials", {}).items():
        materials[name] = _patch(f"materials.{name}", MaterialProperties,
                                 materials.get(name), patch, name)
    crew = dict(reg.crew)
    for name, patch in doc.get("crew", {}).items():
        _check_keys(f"crew.{name}", patch, _field_names(CrewProfile))
        try:
            crew[name] = dataclasses.replace(crew.get(name, CrewProfile()), **patch)
        except ModelError as exc:
            raise SchemaError(f"crew.{name}: {exc}") from None
    diet = reg.diet
    if "diet" in doc:
        if not isinstance(doc["diet"], list):
            raise SchemaError("diet: expected a list of rows")
        rows = []
        for i, row in enumerate(doc["diet"]):
            _check_keys(f"diet[{i}]", row, _field_names(DietRow))
            try:
                rows.append(DietRow(**row))
            except (TypeError, ModelError) as exc:
                raise SchemaError(f"diet[{i}]: {exc}") from None
        diet = tuple(rows)
    registry = dataclasses.replace(reg, bodies=bodies, materials=materials, crew=crew, diet=diet)
    structures = _structures(doc.get("structures", {}), default_catalog())

    scenarios: dict[str, ScenarioConfig] = {
        name: dataclasses.replace(cfg, registry=registry, body=registry.body(cfg.body.name),
                                  structures=structures)
        for name, cfg in builtin_scenarios(registry).items()
    }
    user = doc.get("scenarios", {})
    if not isinstance(user, Mapping):
        raise SchemaError("scenarios: expected an object")
    for name, spec in user.items():
        scenarios[name] = _scenario(name, spec, registry, structures)
    return ConfigDocument(registry=registry, structures=structures, scenarios=scenarios)


def load_config(path: str | Path) -> ConfigDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigReadError(f"cannot read config {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigReadError(f"config {path} is not valid JSON: {exc}") from None
    return parse_config(doc)


def default_document() -> ConfigDocument:
    return parse_config({})
