"""Recursive recognition: contractibility, spheres, manifolds, readiness."""

import pytest

from diskgeo.catalog import catalog_complex
from diskgeo.complexes import barycentric, generate_closure
from diskgeo.errors import RecognitionLimitError
from diskgeo.topology import (
    canonical_form,
    clear_recognition_cache,
    contraction_witness,
    geodesic_readiness,
    is_contractible,
    is_manifold,
    is_sphere,
)


# -- contractibility -------------------------------------------------------------

def test_point_is_contractible():
    assert is_contractible(generate_closure([(1,)]))


def test_empty_is_not_contractible():
    assert not is_contractible(generate_closure([]))


def test_solid_tetrahedron_is_contractible(k4):
    assert is_contractible(k4)


def test_path_is_contractible(path3):
    assert is_contractible(path3)


def test_4_cycle_is_not_contractible():
    assert not is_contractible(catalog_complex("cycle(4)"))


def test_two_points_are_not_contractible():
    assert not is_contractible(generate_closure([(1,), (2,)]))


def test_contraction_witness_satisfies_definition(k4):
    v = contraction_witness(k4)
    assert v == 1
    assert is_contractible(k4.unit_sphere((v,)))
    assert is_contractible(k4.complement_of_star((v,)))
    assert contraction_witness(catalog_complex("cycle(5)")) is None


# -- spheres ----------------------------------------------------------------------

def test_empty_is_minus_one_sphere():
    assert is_sphere(generate_closure([]), -1)
    assert not is_sphere(generate_closure([(1,)]), -1)


def test_zero_sphere_is_two_points():
    assert is_sphere(generate_closure([(1,), (2,)]), 0)
    assert not is_sphere(generate_closure([(1,)]), 0)
    assert not is_sphere(generate_closure([(1,), (2,), (3,)]), 0)


def test_octahedron_is_2_sphere(octahedron):
    assert is_sphere(octahedron, 2)


def test_icosahedron_is_2_sphere(icosahedron):
    assert is_sphere(icosahedron, 2)


def test_solid_triangle_is_not_a_sphere(solid_triangle):
    assert not is_sphere(solid_triangle, 2)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_cycles_are_1_spheres(n):
    assert is_sphere(catalog_complex(f"cycle({n})"), 1)


def test_sphere_implies_manifold_implies_pure(octahedron):
    assert is_manifold(octahedron, 2)
    assert octahedron.is_pure and octahedron.dimension == 2


# -- manifolds ---------------------------------------------------------------------

def test_octahedron_is_manifold(octahedron):
    assert is_manifold(octahedron, 2)
    assert not is_manifold(octahedron, 3)


def test_path_is_not_manifold(path3):
    assert not is_manifold(path3, 1)


def test_cycle_is_1_manifold():
    assert is_manifold(catalog_complex("cycle(5)"), 1)


def test_rp2_is_2_manifold_but_not_sphere(rp2):
    assert is_manifold(rp2, 2)
    assert not is_sphere(rp2, 2)


def test_rp3_is_3_manifold(rp3):
    assert is_manifold(rp3, 3)


def test_torus_is_manifold_not_sphere(torus13):
    assert is_manifold(torus13, 2)
    assert not is_sphere(torus13, 2)


def test_fast_mode_agrees_on_catalog(octahedron, path3, torus13):
    for c, q in ((octahedron, 2), (path3, 1), (torus13, 2)):
        assert is_manifold(c, q, fast=True) == is_manifold(c, q)


@pytest.mark.parametrize("name,q,fast", [
    ("octahedron", 2, False),
    ("icosahedron", 2, False),
    ("rp2", 2, True),
    ("rp3", 3, True),
])
def test_manifold_invariant_under_barycentric(name, q, fast):
    c = catalog_complex(name)
    refined = barycentric(c)
    assert is_manifold(refined, q, fast=fast)


# -- readiness ----------------------------------------------------------------------

def test_manifold_readiness_all_interior(octahedron):
    verdict = geodesic_readiness(octahedron)
    assert verdict.kind == "geodesic_ready"
    assert set(verdict.wall_census.values()) == {2}
    assert verdict.boundary_walls == ()


def test_path_readiness_boundary_walls(path3):
    verdict = geodesic_readiness(path3)
    assert verdict.kind == "geodesic_ready"
    assert verdict.boundary_walls == ((1,), (4,))


def test_fan_is_not_ready(fan3):
    verdict = geodesic_readiness(fan3)
    assert verdict.kind == "none"
    assert verdict.wall_census[(1, 2)] == 3


def test_point_readiness():
    verdict = geodesic_readiness(generate_closure([(1,)]))
    assert verdict.kind == "geodesic_ready"


def test_manifold_implies_ready(rp3, torus13):
    for c in (rp3, torus13):
        verdict = geodesic_readiness(c)
        assert verdict.kind == "geodesic_ready"
        assert set(verdict.wall_census.values()) == {2}


# -- machinery -----------------------------------------------------------------------

def test_size_ceiling_raises(octahedron):
    with pytest.raises(RecognitionLimitError):
        is_manifold(octahedron, 2, ceiling=10)


def test_canonical_form_identifies_relabelled_links(octahedron):
    links = [canonical_form(octahedron.unit_sphere((v,))) for v in octahedron.vertices]
    assert len(set(links)) == 1


def test_results_stable_across_cache_reset(octahedron):
    clear_recognition_cache()
    cold = is_sphere(octahedron, 2)
    warm = is_sphere(octahedron, 2)
    assert cold == warm is True
