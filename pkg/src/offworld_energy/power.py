"""Solar-thermal and photovoltaic plant sizing."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError


@dataclass(frozen=True)
class PlantRequest:
    """Daily demand and site conditions for one plant.

    ``conversion_efficiency`` is 1.0 for the solar-thermal absorber and the
    cell efficiency for PV.
    """

    energy_per_day: float         # [J]
    insolation: float             # [W/m^2]
    daylight_per_day: float       # [s]
    conversion_efficiency: float

    def __post_init__(self):
        if min(self.energy_per_day, self.insolation, self.daylight_per_day) <= 0:
            raise InvalidInputError("energy, insolation and daylight must be positive")
        if not 0 < self.conversion_efficiency <= 1:
            raise InvalidInputError("conversion efficiency must lie in (0, 1]")


def plant_area(req: PlantRequest) -> float:
    """Collector area [m^2] that meets the daily demand."""
    return req.energy_per_day / (req.daylight_per_day * req.insolation
                                 * req.conversion_efficiency)
