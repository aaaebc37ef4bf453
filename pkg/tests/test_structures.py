import math

import pytest
from hypothesis import given, strategies as st

from offworld_energy.errors import InvalidSpecError
from offworld_energy.structures import (
    REQUIRED_DIMS, StructureKind, StructureSpec, default_catalog, dome_volume,
    structure_volume,
)

from oracles import dome_shell_quadrature

K = StructureKind
CATALOG = {s.kind: s for s in default_catalog()}
pos = st.floats(min_value=0.01, max_value=1e3, allow_nan=False)


def test_road_volume():
    assert structure_volume(CATALOG[K.ROAD]) == pytest.approx(19_200.0, rel=1e-12)


def test_refinery_dome_volume():
    # hand value 8,589.1 is rounded; the exact expression gives 8,589.248
    v = structure_volume(CATALOG[K.REFINERY_DOME])
    assert v == pytest.approx(8_589.1, rel=5e-5)
    assert v == pytest.approx(2 / 3 * math.pi * (50**3 - 49.6**3) + math.pi * 0.3 * 50**2,
                              rel=1e-12)


def test_zero_thickness_dome():
    d = {"outer_radius": 10.0, "inner_radius": 10.0, "base_depth": 0.0}
    assert structure_volume(StructureSpec(K.SERVICE_DOME, 1, d, 0.1)) == 0.0


def test_dome_shell_matches_quadrature():
    d = {"outer_radius": 50.0, "inner_radius": 49.6, "base_depth": 0.0}
    assert dome_volume(d) == pytest.approx(dome_shell_quadrature(50.0, 49.6), rel=1e-9)


def test_catalog_has_fifteen_kinds():
    assert {s.kind for s in default_catalog()} == set(K)
    assert sum(s.human_only for s in default_catalog()) == 4


def test_every_catalog_row_validates():
    for spec in default_catalog():
        assert structure_volume(spec) > 0
        assert REQUIRED_DIMS[spec.kind] <= set(spec.dims)


def test_mass_driver_slope_has_no_effect():
    md = CATALOG[K.MASS_DRIVER]
    tilted = StructureSpec(md.kind, 1, {**md.dims, "slope_deg": 45.0}, md.steel_ratio)
    assert structure_volume(tilted) == structure_volume(md)


def test_rail_is_tube_pair_plus_track():
    rail = CATALOG[K.SUPERCONDUCTIVE_RAIL]
    d = rail.dims
    r, t, length = d["inner_radius"], d["thickness"], d["length"]
    expected = (2 * math.pi * length * ((r + t) ** 2 - r ** 2)
                + length / d["post_spacing"] * 2 * d["post_height"] * d["post_width"] ** 2
                + d["magnet_depth"] * d["post_width"] * length)
    assert structure_volume(rail) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("dims,kind", [
    ({"length": -1.0, "width": 8.0, "depth": 0.2}, K.ROAD),
    ({"outer_radius": 10.0, "inner_radius": 11.0, "base_depth": 0.3}, K.SERVICE_DOME),
    ({"length": 1.0, "width": 8.0}, K.ROAD),
])
def test_invalid_dims(dims, kind):
    with pytest.raises(InvalidSpecError):
        structure_volume(StructureSpec(kind, 1, dims, 0.1))


def test_invalid_quantity_and_ratio():
    road = CATALOG[K.ROAD]
    with pytest.raises(InvalidSpecError):
        StructureSpec(K.ROAD, -1, road.dims, 0.05).validate()
    with pytest.raises(InvalidSpecError):
        StructureSpec(K.ROAD, 1, road.dims, 1.5).validate()


@given(ro=pos, frac=st.floats(min_value=0.01, max_value=0.99), depth=pos)
def test_dome_shell_below_solid_hemisphere(ro, frac, depth):
    shell = dome_volume({"outer_radius": ro, "inner_radius": ro * frac, "base_depth": 0.0})
    assert 0 <= shell < 2.0 / 3.0 * math.pi * ro ** 3


@given(k=st.floats(min_value=0.1, max_value=10.0))
def test_cubic_scaling_of_pure_products(k):
    for kind in (K.ROAD, K.POWER_PAD):
        base = CATALOG[kind]
        scaled = StructureSpec(kind, 1, {n: v * k for n, v in base.dims.items()},
                               base.steel_ratio)
        assert structure_volume(scaled) == pytest.approx(structure_volume(base) * k ** 3,
                                                         rel=1e-9)


@given(kind=st.sampled_from(list(K)), factor=st.floats(min_value=1.01, max_value=5.0),
       data=st.data())
def test_volume_increasing_in_additive_dims(kind, factor, data):
    base = CATALOG[kind]
    additive = [n for n in base.dims
                if n in ("depth", "base_depth", "length", "thickness", "wall_thickness",
                         "wall_height", "magnet_depth", "height")]
    if not additive:
        return
    name = data.draw(st.sampled_from(additive))
    grown = StructureSpec(kind, 1, {**base.dims, name: base.dims[name] * factor},
                          base.steel_ratio)
    assert structure_volume(grown) > structure_volume(base)
