"""Acceptance gate: one recorded pass/fail line per criterion.

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines inline; they
are also collected in the terminal summary of every run.
"""
import math

from offworld_energy.claims import DISCREPANT, MATCH, COMPUTED_PATHS, verify_paper_claims
from offworld_energy.constants import MJ
from offworld_energy.isru import melt_ice_to_water, dig_energy, DigTask
from offworld_energy.scenario import (
    HUMAN, ROBOTIC, builtin_scenarios, evaluate_construction, evaluate_operations,
    evaluate_rail_construction, make_scenario, water_chain, metal_chain,
)
from offworld_energy.reports import render_ledgers, render_claims, render_ratio_reports
from offworld_energy.scenario import compare_scenarios

from oracles import segmented_ice_heating_kj, trip_level_dig_j


def _rel(a, b):
    return abs(a - b) / abs(b)


def _path(name, reg):
    return COMPUTED_PATHS[name](reg)


def test_c01_rail_haul(registry, record):
    v = _path("isru.rail_haul.moon_water", registry)
    record("C1 rail haul 972 MJ (0.5%)", _rel(v, 972) <= 0.005, f"{v:.4f} MJ")


def test_c02_ilmenite_chain(registry, record):
    ore = _path("isru.ore_mass.ilmenite_for_titanium", registry)
    dig = _path("isru.dig.ilmenite", registry)
    haul = _path("isru.haul.ilmenite_overburden", registry)
    proc = _path("isru.haul.metal_processed", registry)
    ok = (_rel(ore, 4.53e5) <= 0.01 and _rel(dig, 53.5) <= 0.02
          and _rel(haul, 55.0) <= 0.03 and _rel(proc, 3.2) <= 0.03)
    record("C2 ilmenite chain", ok,
           f"ore {ore:.4e} kg, dig {dig:.3f} MJ, haul {haul:.3f} MJ, processed {proc:.3f} MJ")


def test_c03_water_overburden(registry, record):
    v = _path("isru.haul.ice_overburden", registry)
    record("C3 water overburden haul 10.7 MJ (2%)", _rel(v, 10.7) <= 0.02, f"{v:.4f} MJ")


def test_c04_mass_driver(registry, record):
    moon = _path("launch.energy.moon", registry)
    mars = _path("launch.energy.mars", registry)
    ratio = _path("launch.ratio.mars_moon", registry)
    ok = _rel(moon, 3.567e6) <= 0.01 and _rel(mars, 1.51e7) <= 0.01 and _rel(ratio, 4.23) <= 0.005
    record("C4 mass driver", ok, f"moon {moon:.5e} MJ, mars {mars:.5e} MJ, ratio {ratio:.4f}")


def test_c05_refining(registry, record):
    steel = _path("isru.refine.low_grade_steel", registry)
    ti = _path("isru.refine.titanium", registry)
    three = _path("isru.refine.three_metals", registry)
    ok = _rel(steel, 2.5e6) <= 0.03 and _rel(ti, 1.21e7) <= 0.01 and _rel(three, 2.84e7) <= 0.03
    record("C5 refining", ok, f"steel {steel:.4e}, titanium {ti:.4e}, three metals {three:.4e} MJ")


def test_c06_crew(registry, record):
    moon = _path("crew.moon.total", registry)
    mars = _path("crew.mars.total", registry)
    o2 = _path("crew.moon.oxygen", registry)
    ok = _rel(moon, 75_339) <= 0.005 and _rel(mars, 69_950) <= 0.005 and _rel(o2, 16_676) <= 0.001
    record("C6 crew", ok, f"moon {moon:,.1f}, mars {mars:,.1f}, oxygen {o2:,.1f} MJ")


def test_c07_solar_sizing(registry, record):
    mt = _path("power.moon.thermal_km2", registry)
    mp = _path("power.moon.pv_km2", registry)
    xt = _path("power.mars.thermal_km2", registry)
    xp = _path("power.mars.pv_km2", registry)
    ok = (_rel(mt, 0.15) <= 0.10 and _rel(mp, 0.33) <= 0.10
          and _rel(xt, 2.82) <= 0.02 and _rel(xp, 6.27) <= 0.02)
    record("C7 solar sizing", ok,
           f"moon {mt:.4f}/{mp:.4f} km2, mars {xt:.4f}/{xp:.4f} km2 (thermal/PV)")


def test_c08_operations_totals(registry, record):
    moon = evaluate_operations(make_scenario("moon", HUMAN, registry=registry))
    mars = evaluate_operations(make_scenario("mars", HUMAN, registry=registry))
    ref = moon.share("refining")
    drv = mars.share("mass_driver")
    ok = (_rel(moon.total / MJ, 3.27e7) <= 0.05 and abs(ref - 86.6) <= 2
          and _rel(mars.total / MJ, 4.42e7) <= 0.05 and abs(drv - 34) <= 2)
    record("C8 operations totals", ok,
           f"moon {moon.total / MJ:.4e} MJ (refining {ref:.2f}%), "
           f"mars {mars.total / MJ:.4e} MJ (driver {drv:.2f}%)")


MUST_MATCH = {
    "rail_haul_ice", "ilmenite_mass", "ilmenite_dig", "ilmenite_overburden_haul",
    "metal_processed_haul", "ice_overburden_haul", "mass_driver_moon", "mass_driver_mars",
    "mass_driver_ratio", "refining_steel", "refining_titanium", "refining_three_metals",
    "crew_oxygen", "crew_total_moon", "crew_total_mars", "solar_thermal_moon",
    "solar_pv_moon", "solar_thermal_mars", "solar_pv_mars", "ops_total_moon",
    "ops_refining_share_moon", "ops_total_mars", "ops_driver_share_mars",
}
MUST_BE_DISCREPANT = {
    "water_ice_extraction", "hydrate_extraction", "ice_dig", "water_processed_haul",
    "escape_speed_moon", "crew_total_moon_results", "ops_ratio_mars_moon",
}


def test_c09_claims_ledger(record):
    claims = {c.id: c for c in verify_paper_claims()}
    missing = (MUST_MATCH | MUST_BE_DISCREPANT) - set(claims)
    bad_match = sorted(i for i in MUST_MATCH & set(claims) if claims[i].status != MATCH)
    bad_disc = sorted(i for i in MUST_BE_DISCREPANT & set(claims)
                      if claims[i].status != DISCREPANT)
    ok = not missing and not bad_match and not bad_disc
    record("C9 claims ledger", ok,
           f"{sum(c.status == MATCH for c in claims.values())}/{len(claims)} MATCH; "
           f"missing {sorted(missing)}, wrongly discrepant {bad_match}, "
           f"wrongly matching {bad_disc}")


def _construction_totals(reg, body):
    return {(crew, method): evaluate_construction(make_scenario(body, crew, method,
                                                                registry=reg)).total
            for crew in (ROBOTIC, HUMAN) for method in ("print3d", "conventional")}


def test_c10a_print_robotic_is_minimum(registry, record):
    details, ok = [], True
    for body in ("moon", "mars"):
        t = _construction_totals(registry, body)
        best = t[(ROBOTIC, "print3d")]
        ok &= all(best < v for k, v in t.items() if k != (ROBOTIC, "print3d"))
        details.append(f"{body} min {best / MJ:.4e} MJ")
    record("C10a robotic print3d strict minimum", ok, ", ".join(details))


def test_c10b_conventional_ratio_band(registry, record):
    t = _construction_totals(registry, "moon")
    r = t[(HUMAN, "conventional")] / t[(ROBOTIC, "print3d")]
    record("C10b human-conventional / robotic-print3d in [10, 40]", 10 <= r <= 40, f"{r:.4f}")


def test_c10c_rail_ratio_band(registry, record):
    cfg = make_scenario("moon", ROBOTIC, registry=registry)
    r = evaluate_rail_construction(cfg).total / evaluate_construction(cfg).total
    record("C10c rail / robotic-print3d base in [20, 50]", 20 <= r <= 50, f"{r:.4f}")


def test_c10d_refinery_share(registry, record):
    share = evaluate_construction(make_scenario("moon", ROBOTIC, registry=registry)) \
        .share("refinery_dome")
    record("C10d refinery share 90 +/- 10 points", abs(share - 90) <= 10, f"{share:.2f}%")


def test_c11_oracle_equivalence(registry, record):
    p, moon = registry.process, registry.body("moon")
    closed = dig_energy(DigTask(1.0e5, moon.water_ore_purity, moon.water_ore_density,
                                p.dig_force, p.robot_area, p.movement_ratio,
                                p.pit_friction, moon.g))
    sim = trip_level_dig_j(1.0e5, moon.water_ore_purity, moon.water_ore_density, p.dig_force,
                           p.robot_area, p.movement_ratio, p.pit_friction, moon.g, 20_000)
    heat = melt_ice_to_water(1.0e5, -150.0, 25.0)
    seg = segmented_ice_heating_kj(1.0e5, -150.0, 25.0) * 1e3
    ledgers_exact = True
    for cfg in builtin_scenarios(registry).values():
        for led in (evaluate_construction(cfg), evaluate_operations(cfg),
                    evaluate_rail_construction(cfg)):
            ledgers_exact &= led.total == math.fsum(v for _, v in led)
    ok = _rel(sim, closed) <= 1e-6 and _rel(seg, heat) <= 1e-9 and ledgers_exact
    record("C11 oracle equivalence", ok,
           f"dig rel {_rel(sim, closed):.2e}, heating rel {_rel(seg, heat):.2e}, "
           f"ledgers exact {ledgers_exact}")


def _suite_reports() -> str:
    out = []
    scenarios = builtin_scenarios()
    for name, cfg in scenarios.items():
        for fmt in ("csv", "json"):
            out.append(render_ledgers([("operations", evaluate_operations(cfg))], fmt,
                                      name, "operations"))
            out.append(render_ledgers([("base", evaluate_construction(cfg)),
                                       ("rail", evaluate_rail_construction(cfg))], fmt,
                                      name, "construction"))
    for fmt in ("csv", "json"):
        out.append(render_ratio_reports(
            [("operations", compare_scenarios(scenarios["mars-human-print3d"],
                                              scenarios["moon-human-print3d"]))], fmt))
        out.append(render_claims(verify_paper_claims(), fmt))
    return "\n".join(out)


def test_c12_determinism(record):
    a, b = _suite_reports().encode(), _suite_reports().encode()
    record("C12 byte-identical reports", a == b, f"{len(a)} bytes per run")
