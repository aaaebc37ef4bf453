"""
Auditing published figures
==========================

Run the shipped claim fixtures through the engine and list the ones the
model does not reproduce, with the size of the gap.
"""

from offworld_energy.claims import DISCREPANT, verify_paper_claims

claims = verify_paper_claims()
print(f"{sum(c.status != DISCREPANT for c in claims)}/{len(claims)} claims reproduced")

###############################################################################
# Discrepant claims, largest relative gap first.

for c in sorted((c for c in claims if c.status == DISCREPANT), key=lambda c: -abs(c.deviation)):
    print(f"{c.id:36s} claimed {c.claimed_value:11.4g}  computed {c.computed:11.4g}"
          f"  ({c.deviation:+.1%})")
