"""Construction energy under 3D printing or steel frame with sand blocks."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .constants import BodyProfile, MaterialProperties, default_registry
from .structures import StructureKind, StructureSpec, structure_volume

PRINT3D = "print3d"
STEEL_BLOCK = "steel_block"
METHODS = (PRINT3D, STEEL_BLOCK)


@dataclass(frozen=True)
class ConstructionMethod:
    """How the base is built.

    ``mu_structure``/``mu_road`` are the steel-frame (and melted sand) volume
    fractions of the block method; ``transport_distance`` feeds the optional
    gravity haul term of sand printing.
    """

    variant: str = PRINT3D
    mu_structure: float = 0.15
    mu_road: float = 0.05
    transport_distance: float = 0.0

    def __post_init__(self):
        if self.variant not in METHODS:
            raise InvalidInputError(f"unknown construction method {self.variant!r}")
        for mu in (self.mu_structure, self.mu_road):
            if not 0.0 <= mu <= 1.0:
                raise InvalidInputError("mu must lie in [0, 1]")
        if self.transport_distance < 0:
            raise InvalidInputError("transport distance must be >= 0")


def _sand_steel(sand, steel):
    reg = default_registry()
    return sand or reg.material("sand"), steel or reg.material("steel")


def specific_heat_and_melt(material: MaterialProperties) -> float:
    """Energy to heat one kilogram through ``delta_T`` and melt it [J/kg]."""
    return material.heat_capacity * material.delta_T + material.melt_enthalpy


def sand_print_energy(volume: float, transport_distance: float, g: float,
                      sand: MaterialProperties | None = None) -> float:
    """Heat, melt and haul ``volume`` m^3 of sand [J]."""
    if volume < 0:
        raise InvalidInputError("volume must be >= 0")
    sand, _ = _sand_steel(sand, None)
    return sand.density * volume * (specific_heat_and_melt(sand) + g * transport_distance)


def reinforced_print_energy(volume: float, steel_ratio: float,
                            sand: MaterialProperties | None = None,
                            steel: MaterialProperties | None = None) -> float:
    """Printed sand with a volumetric steel fraction ``steel_ratio`` [J]."""
    if volume < 0:
        raise InvalidInputError("volume must be >= 0")
    if not 0.0 <= steel_ratio <= 1.0:
        raise InvalidInputError("steel ratio must lie in [0, 1]")
    sand, steel = _sand_steel(sand, steel)
    sand_part = sand.density * (1.0 - steel_ratio) * volume * specific_heat_and_melt(sand)
    steel_part = steel_ratio * volume * steel.density * specific_heat_and_melt(steel)
    return sand_part + steel_part


def block_build_energy(volume: float, mu: float,
                       sand: MaterialProperties | None = None,
                       steel: MaterialProperties | None = None) -> float:
    """Steel frame plus sand blocks; the same fraction ``mu`` applies to both [J]."""
    if volume < 0:
        raise InvalidInputError("volume must be >= 0")
    if not 0.0 <= mu <= 1.0:
        raise InvalidInputError("mu must lie in [0, 1]")
    sand, steel = _sand_steel(sand, steel)
    return (steel.density * volume * mu * specific_heat_and_melt(steel)
            + sand.density * volume * mu * specific_heat_and_melt(sand))


def structure_construction_energy(spec: StructureSpec, method: ConstructionMethod,
                                  body: BodyProfile,
                                  sand: MaterialProperties | None = None,
                                  steel: MaterialProperties | None = None) -> float:
    """Energy to build every unit of ``spec`` with ``method`` on ``body`` [J].

    Under printing the haul term of the sand share is included when
    ``method.transport_distance`` is non-zero.
    """
    volume = spec.quantity * structure_volume(spec)
    if method.variant == PRINT3D:
        energy = reinforced_print_energy(volume, spec.steel_ratio, sand, steel)
        if method.transport_distance:
            sand_m, _ = _sand_steel(sand, None)
            energy += (sand_m.density * (1.0 - spec.steel_ratio) * volume
                       * body.g * method.transport_distance)
        return energy
    mu = method.mu_road if spec.kind == StructureKind.ROAD else method.mu_structure
    return block_build_energy(volume, mu, sand, steel)


def construction_time(total_energy: float, plant_power: float) -> float:
    """Build duration [s] when a plant of ``plant_power`` W runs continuously."""
    if plant_power <= 0:
        raise InvalidInputError("plant power must be positive")
    return total_energy / plant_power
