"""Daily crew life-support energy: oxygen, electricity, water, food."""
from __future__ import annotations

import math
from typing import Sequence

from .constants import BodyProfile, CrewProfile, DietRow, PhysicalConstants, default_registry
from .ledger import EnergyLedger

DietTable = Sequence[DietRow]


def diet_energy_per_person(diet: DietTable) -> float:
    """Production energy of one person's daily food, before waste [J]."""
    return math.fsum(row.energy_per_kg * row.kg_per_person for row in diet)


def food_energy(diet: DietTable, headcount: int, waste_factor: float) -> float:
    return headcount * waste_factor * diet_energy_per_person(diet)


def crew_daily_energy(profile: CrewProfile, diet: DietTable, body: BodyProfile | None = None,
                      constants: PhysicalConstants | None = None) -> EnergyLedger:
    """Itemized daily demand of the whole crew.

    ``body`` is accepted for symmetry with the other evaluators; the body
    dependence is already folded into ``profile``.
    """
    c = constants or default_registry().constants
    n = profile.headcount
    oxygen = n * profile.o2_moles_per_person * profile.o2_energy
    electricity = n * profile.electricity_per_person * c.joule_per_kwh
    water = n * (profile.water_per_person * profile.water_recycle_energy
                 + profile.water_delta_per_person)
    food = food_energy(diet, n, profile.waste_factor) + n * profile.food_delta_per_person
    return EnergyLedger((
        ("oxygen", oxygen),
        ("electricity", electricity),
        ("water", water),
        ("food", food),
    ))
