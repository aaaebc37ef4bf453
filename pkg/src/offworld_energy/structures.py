"""Base structure inventory and per-unit construction volumes.

Each structure kind has one volume formula. Formulas are evaluated exactly as
published, including the double-cylinder factor of the mass-driver and rail
tubes and the three-wall blast term of the landing pads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Callable, Mapping

from .errors import InvalidSpecError


class StructureKind(str, Enum):
    ROAD = "road"
    REFINERY_DOME = "refinery_dome"
    SERVICE_DOME = "service_dome"
    CONTROL_TOWER = "control_tower"
    WAREHOUSE_DOME = "warehouse_dome"
    FUEL_STORAGE = "fuel_storage"
    LANDING_PAD_SMALL = "landing_pad_small"
    LANDING_PAD_LARGE = "landing_pad_large"
    POWER_PAD = "power_pad"
    MASS_DRIVER = "mass_driver"
    SUPERCONDUCTIVE_RAIL = "superconductive_rail"
    O2_EXTRACT = "o2_extract"
    HUMAN_SERVICES_DOME = "human_services_dome"
    HABITAT_DOME = "habitat_dome"
    SERVICE_TUBES = "service_tubes"


HUMAN_ONLY = frozenset({
    StructureKind.O2_EXTRACT,
    StructureKind.HUMAN_SERVICES_DOME,
    StructureKind.HABITAT_DOME,
    StructureKind.SERVICE_TUBES,
})


@dataclass(frozen=True)
class StructureSpec:
    """One inventory row: a structure kind, its dimensions [m] and quantity.

    ``dims`` keys depend on the kind (see ``REQUIRED_DIMS``). ``slope_deg`` on
    the mass driver is carried for documentation and does not enter the volume.
    """

    kind: StructureKind
    quantity: int
    dims: Mapping[str, float]
    steel_ratio: float
    human_only: bool = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "kind", StructureKind(self.kind))
        object.__setattr__(self, "dims", MappingProxyType(dict(self.dims)))
        if self.human_only is None:
            object.__setattr__(self, "human_only", self.kind in HUMAN_ONLY)

    def validate(self) -> None:
        if self.quantity < 0:
            raise InvalidSpecError(f"{self.kind.value}: quantity must be >= 0")
        if not 0.0 <= self.steel_ratio <= 1.0:
            raise InvalidSpecError(f"{self.kind.value}: steel ratio must lie in [0, 1]")
        missing = REQUIRED_DIMS[self.kind] - set(self.dims)
        if missing:
            raise InvalidSpecError(f"{self.kind.value}: missing dimensions {sorted(missing)}")
        for name, value in self.dims.items():
            if value < 0:
                raise InvalidSpecError(f"{self.kind.value}: dimension {name} is negative")
        if "outer_radius" in self.dims and self.dims["inner_radius"] > self.dims["outer_radius"]:
            raise InvalidSpecError(f"{self.kind.value}: inner radius exceeds outer radius")
        if "post_spacing" in self.dims and self.dims["post_spacing"] <= 0:
            raise InvalidSpecError(f"{self.kind.value}: post spacing must be positive")


_DOME = frozenset({"outer_radius", "inner_radius", "base_depth"})
_SLAB = frozenset({"length", "width", "depth"})
_TANK = frozenset({"radius", "wall_thickness", "wall_height"})
_TUBE_PAIR = frozenset({"inner_radius", "length", "thickness",
                        "post_height", "post_width", "post_spacing"})

REQUIRED_DIMS: Mapping[StructureKind, frozenset] = MappingProxyType({
    StructureKind.ROAD: _SLAB,
    StructureKind.REFINERY_DOME: _DOME,
    StructureKind.SERVICE_DOME: _DOME,
    StructureKind.CONTROL_TOWER: frozenset({"height", "base_length", "top_length"}),
    StructureKind.WAREHOUSE_DOME: _DOME,
    StructureKind.FUEL_STORAGE: _TANK,
    StructureKind.LANDING_PAD_SMALL: _SLAB | {"wall_height"},
    StructureKind.LANDING_PAD_LARGE: _SLAB | {"wall_height"},
    StructureKind.POWER_PAD: _SLAB,
    StructureKind.MASS_DRIVER: _TUBE_PAIR,
    StructureKind.SUPERCONDUCTIVE_RAIL: _TUBE_PAIR | {"magnet_depth"},
    StructureKind.O2_EXTRACT: _TANK,
    StructureKind.HUMAN_SERVICES_DOME: _DOME,
    StructureKind.HABITAT_DOME: _DOME,
    StructureKind.SERVICE_TUBES: frozenset({"length", "outer_radius", "inner_radius"}),
})


def slab_volume(d: Mapping[str, float]) -> float:
    return d["length"] * d["width"] * d["depth"]


def dome_volume(d: Mapping[str, float]) -> float:
    """Hemispherical shell plus a circular base slab."""
    ro, ri = d["outer_radius"], d["inner_radius"]
    return 2.0 / 3.0 * math.pi * (ro**3 - ri**3) + math.pi * d["base_depth"] * ro**2


def tower_volume(d: Mapping[str, float]) -> float:
    # not a frustum; kept in the published form
    h, l1, l2 = d["height"], d["base_length"], d["top_length"]
    return h * l2**2 + h * (l1 - l2) * l2


def tank_volume(d: Mapping[str, float]) -> float:
    r, t, h = d["radius"], d["wall_thickness"], d["wall_height"]
    return 2.0 * math.pi * r**2 * t + 2.0 * math.pi * r * h * t


def pad_volume(d: Mapping[str, float]) -> float:
    """Pad slab plus three blast walls (two long, one short)."""
    l, w, depth, h = d["length"], d["width"], d["depth"], d["wall_height"]
    return l * w * depth + 2.0 * l * h * depth + w * h * depth


def _tube_pair_and_posts(d: Mapping[str, float]) -> float:
    r, length, t = d["inner_radius"], d["length"], d["thickness"]
    shell = 2.0 * math.pi * length * (r + t) ** 2 - 2.0 * math.pi * length * r**2
    # post count L/spacing is left fractional
    posts = length / d["post_spacing"] * 2.0 * d["post_height"] * d["post_width"] ** 2
    return shell + posts


def mass_driver_volume(d: Mapping[str, float]) -> float:
    return _tube_pair_and_posts(d)


def rail_volume(d: Mapping[str, float]) -> float:
    # magnet track uses the post width as its width
    track = d["magnet_depth"] * d["post_width"] * d["length"]
    return _tube_pair_and_posts(d) + track


def service_tube_volume(d: Mapping[str, float]) -> float:
    return math.pi * (d["outer_radius"] ** 2 - d["inner_radius"] ** 2) * d["length"]


VOLUME_FORMULAS: Mapping[StructureKind, Callable[[Mapping[str, float]], float]] = MappingProxyType({
    StructureKind.ROAD: slab_volume,
    StructureKind.REFINERY_DOME: dome_volume,
    StructureKind.SERVICE_DOME: dome_volume,
    StructureKind.CONTROL_TOWER: tower_volume,
    StructureKind.WAREHOUSE_DOME: dome_volume,
    StructureKind.FUEL_STORAGE: tank_volume,
    StructureKind.LANDING_PAD_SMALL: pad_volume,
    StructureKind.LANDING_PAD_LARGE: pad_volume,
    StructureKind.POWER_PAD: slab_volume,
    StructureKind.MASS_DRIVER: mass_driver_volume,
    StructureKind.SUPERCONDUCTIVE_RAIL: rail_volume,
    StructureKind.O2_EXTRACT: tank_volume,
    StructureKind.HUMAN_SERVICES_DOME: dome_volume,
    StructureKind.HABITAT_DOME: dome_volume,
    StructureKind.SERVICE_TUBES: service_tube_volume,
})


def structure_volume(spec: StructureSpec) -> float:
    """Construction volume of one unit of ``spec`` [m^3].

    Multiply by ``spec.quantity`` for the whole row.
    """
    spec.validate()
    return VOLUME_FORMULAS[spec.kind](spec.dims)


def _dome(ro, ri, depth):
    return {"outer_radius": ro, "inner_radius": ri, "base_depth": depth}


def default_catalog() -> tuple[StructureSpec, ...]:
    """The fifteen-row base inventory with its published dimensions."""
    K = StructureKind
    return (
        StructureSpec(K.ROAD, 1, {"length": 12_000.0, "width": 8.0, "depth": 0.2}, 0.05),
        StructureSpec(K.REFINERY_DOME, 9, _dome(50.0, 49.6, 0.3), 0.1),
        StructureSpec(K.SERVICE_DOME, 6, _dome(25.0, 24.6, 0.3), 0.1),
        StructureSpec(K.CONTROL_TOWER, 1,
                      {"height": 150.0, "base_length": 25.0, "top_length": 5.0}, 0.1),
        StructureSpec(K.WAREHOUSE_DOME, 21, _dome(25.0, 24.8, 0.3), 0.1),
        StructureSpec(K.FUEL_STORAGE, 6,
                      {"radius": 25.0, "wall_thickness": 0.1, "wall_height": 2.0}, 0.05),
        StructureSpec(K.LANDING_PAD_SMALL, 3,
                      {"length": 100.0, "width": 50.0, "depth": 0.2, "wall_height": 0.5}, 0.05),
        StructureSpec(K.LANDING_PAD_LARGE, 3,
                      {"length": 100.0, "width": 100.0, "depth": 0.2, "wall_height": 0.5}, 0.05),
        StructureSpec(K.POWER_PAD, 1, {"length": 1000.0, "width": 1000.0, "depth": 0.1}, 0.05),
        StructureSpec(K.MASS_DRIVER, 1,
                      {"inner_radius": 3.0, "length": 10_000.0, "thickness": 0.5,
                       "slope_deg": 5.0, "post_height": 5.0, "post_width": 1.0,
                       "post_spacing": 20.0}, 0.05),
        StructureSpec(K.SUPERCONDUCTIVE_RAIL, 1,
                      {"inner_radius": 3.0, "length": 1.0e6, "magnet_depth": 0.1,
                       "thickness": 0.5, "post_height": 5.0, "post_width": 1.0,
                       "post_spacing": 20.0}, 0.05),
        StructureSpec(K.O2_EXTRACT, 18,
                      {"radius": 50.0, "wall_thickness": 0.2, "wall_height": 3.0}, 0.2),
        StructureSpec(K.HUMAN_SERVICES_DOME, 6, _dome(50.0, 49.6, 0.3), 0.1),
        StructureSpec(K.HABITAT_DOME, 300, _dome(6.0, 5.9, 0.1), 0.2),
        StructureSpec(K.SERVICE_TUBES, 1,
                      {"length": 10_000.0, "outer_radius": 1.1, "inner_radius": 1.0}, 0.1),
    )
