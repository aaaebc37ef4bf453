"""
Construction trade study
========================

Compare the energy needed to build the base for every crew and method
combination, then look at which structures dominate the printed base.
"""

from offworld_energy.constants import MJ
from offworld_energy.scenario import (
    builtin_scenarios, evaluate_construction, evaluate_rail_construction, make_scenario,
)

###############################################################################
# Totals for the four combinations on each body.
# Printing melts every cubic metre, but only the steel share is costly;
# the block method melts a fixed fraction of both steel and sand.

for name, cfg in builtin_scenarios().items():
    total = evaluate_construction(cfg).total
    print(f"{name:28s} {total / MJ:14.4e} MJ")

###############################################################################
# Where the energy goes in the robotic, printed Moon base.

base = evaluate_construction(make_scenario("moon", "robotic", "print3d"))
for kind, pct in sorted(base.percents(), key=lambda kv: -kv[1]):
    print(f"  {kind:22s} {pct:6.2f} %")

###############################################################################
# The 1000 km rail line is priced on its own. It is always printed, and it
# dwarfs the base itself.

rail = evaluate_rail_construction(make_scenario("moon", "robotic", "print3d"))
print(f"rail / base = {rail.total / base.total:.1f}")
