"""Independent reference computations used by the tests.

These deliberately avoid the package's formula code: constants are typed in
from the source tables and the physics is re-done by brute-force summation.
"""
import math

# kJ-based source constants
RHO_SAND, CP_SAND, H_SAND, DT_SAND = 1500.0, 0.830, 156.0, 1973.0
RHO_STEEL, CP_STEEL, H_STEEL, DT_STEEL = 7750.0, 0.510, 25_230.0, 1640.0
CP_ICE, H_ICE, CP_WATER = 2.108, 333.55, 4.200


def per_kg_increment_sum(n_kg: float, cp: float, dT: float, h: float, step_kg: float = 1.0) -> float:
    """Energy [kJ] of processing ``n_kg`` by adding 1 kg lots one at a time."""
    total, done = 0.0, 0.0
    while done < n_kg - 1e-12:
        lot = min(step_kg, n_kg - done)
        total += lot * cp * dT + lot * h
        done += lot
    return total


def printed_cubic_metre_kj(steel_ratio: float) -> float:
    sand = per_kg_increment_sum(RHO_SAND * (1 - steel_ratio), CP_SAND, DT_SAND, H_SAND)
    steel = per_kg_increment_sum(RHO_STEEL * steel_ratio, CP_STEEL, DT_STEEL, H_STEEL)
    return sand + steel


def block_cubic_metre_kj(mu: float) -> float:
    return (per_kg_increment_sum(RHO_STEEL * mu, CP_STEEL, DT_STEEL, H_STEEL)
            + per_kg_increment_sum(RHO_SAND * mu, CP_SAND, DT_SAND, H_SAND))


def segmented_ice_heating_kj(mass: float, t_ice: float, t_out: float, dT: float = 0.5) -> float:
    """Sensible + latent heat of ice summed over small temperature segments [kJ]."""
    total, t = 0.0, t_ice
    while t < 0.0 - 1e-12:
        step = min(dT, 0.0 - t)
        total += mass * CP_ICE * step
        t += step
    total += mass * H_ICE
    t = 0.0
    while t < t_out - 1e-12:
        step = min(dT, t_out - t)
        total += mass * CP_WATER * step
        t += step
    return total


def trip_level_dig_j(payload, purity, density, dig_force, area, chi, eta, g, passes):
    """Excavation as explicit robot passes.

    The dug volume is split into ``passes`` strips of footprint ``area``. Each
    strip is driven out loaded and back, pushing the dig force (scaled by the
    movement ratio) plus rolling friction on the whole dug mass.
    """
    dug_mass = payload / purity
    strip_length = dug_mass / density / area / passes
    force = chi * dig_force + dug_mass * g * eta
    work = 0.0
    for _ in range(passes):
        work += force * strip_length  # out
        work += force * strip_length  # back
    return work


def dome_shell_quadrature(ro: float, ri: float, n: int = 20_000) -> float:
    """Hemispherical shell volume by midpoint integration over radius."""
    h = (ro - ri) / n
    return sum(2.0 * math.pi * (ri + (i + 0.5) * h) ** 2 * h for i in range(n))
