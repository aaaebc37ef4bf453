"""
Sensitivity sweeps
==================

Sweep a few parameters of the Moon base and watch the daily total move.
The same sweeps are available from the command line, e.g.
``offworld-energy --report sweep --sweep body.rail_distance=0:2e6:5``.
"""

import numpy as np

from offworld_energy.constants import MJ
from offworld_energy.scenario import make_scenario, parameter_sweep

cfg = make_scenario("moon", "human")

###############################################################################
# Rail length only moves the water chain, and only linearly.

for d, led in parameter_sweep(cfg, "body.rail_distance", np.linspace(0, 2e6, 5)):
    print(f"rail {d / 1e3:6.0f} km  -> rail item {led['water.rail'] / MJ:8.1f} MJ")

###############################################################################
# Titanium refining energy is the largest single lever.

values = [80e6, 100e6, 120e6, 140e6]
rows = parameter_sweep(cfg, "materials.titanium.refine_energy", values, max_workers=4)
for v, led in rows:
    print(f"Ti refine {v / 1e6:5.0f} MJ/kg -> total {led.total / MJ:.4e} MJ/day")
