"""
Daily operations budget
=======================

Break the crewed Moon and Mars bases' daily energy into resource chains,
refining, launch and life support, and size the solar plant to match.
"""

from offworld_energy.constants import MJ, default_registry
from offworld_energy.power import PlantRequest, plant_area
from offworld_energy.scenario import evaluate_operations, make_scenario

reg = default_registry()

###############################################################################
# Grouped ledgers. Refining dominates on the Moon; on Mars the higher escape
# speed makes the mass driver the second largest consumer.

ledgers = {body: evaluate_operations(make_scenario(body, "human")) for body in ("moon", "mars")}
for body, led in ledgers.items():
    print(f"{body}: {led.total / MJ:.4e} MJ/day")
    for group, pct in led.grouped().percents():
        print(f"    {group:18s} {pct:6.2f} %")

###############################################################################
# Plant area for each body's own demand, with solar-thermal (lambda = 1) and
# photovoltaic collectors.

for body, led in ledgers.items():
    b = reg.body(body)
    for label, lam in (("thermal", reg.process.solar_thermal_efficiency),
                       ("pv", reg.process.pv_efficiency)):
        area = plant_area(PlantRequest(led.total, b.insolation, b.daylight_per_day, lam))
        print(f"{body:5s} {label:8s} {area / 1e6:8.3f} km^2")
