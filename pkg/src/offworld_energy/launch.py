"""Escape velocity and mass-driver launch energy."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import default_registry
from .errors import InvalidInputError


@dataclass(frozen=True)
class MassDriverSpec:
    """Launcher settings.

    ``container_overhead`` multiplies the payload mass to account for the
    container; ``driver_efficiency_factor`` is electrical energy per unit
    kinetic energy delivered (2.0 means 50 % efficient).
    """

    container_overhead: float
    driver_efficiency_factor: float
    launch_speed: float  # [m/s]

    def __post_init__(self):
        if self.container_overhead < 1 or self.driver_efficiency_factor < 1:
            raise InvalidInputError("overhead and efficiency factors must be >= 1")
        if self.launch_speed <= 0:
            raise InvalidInputError("launch speed must be positive")


def escape_velocity(body_mass: float, body_radius: float, G: float | None = None) -> float:
    """sqrt(2 G M / r) [m/s]."""
    if body_radius <= 0:
        raise InvalidInputError("body radius must be positive")
    if body_mass < 0:
        raise InvalidInputError("body mass must be >= 0")
    if G is None:
        G = default_registry().constants.G
    return math.sqrt(2.0 * G * body_mass / body_radius)


def launch_energy(payload_mass: float, spec: MassDriverSpec) -> float:
    """Electrical energy to throw ``payload_mass`` kg plus container to launch speed [J]."""
    if payload_mass < 0:
        raise InvalidInputError("payload mass must be >= 0")
    return (spec.driver_efficiency_factor * 0.5 * (spec.container_overhead * payload_mass)
            * spec.launch_speed**2)
