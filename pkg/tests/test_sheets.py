"""Bone rings, local disks, sectional curvature, sheet growth."""

import itertools
from collections import Counter
from fractions import Fraction

import pytest

from diskgeo.catalog import CATALAN_NAMES, catalog_complex
from diskgeo.complexes import barycentric
from diskgeo.curvature import partition_curvature, vertex_curvature_2m
from diskgeo.errors import InvalidInputError, NonManifoldBoneError, NotGeodesicReadyError
from diskgeo.sheets import (
    bone_ring,
    grow_sheet,
    local_disk,
    sectional_curvature,
    sectional_spectrum,
)


# -- bone rings -----------------------------------------------------------------

def test_icosahedron_vertex_ring(icosahedron):
    ring = bone_ring(icosahedron, (1,))
    assert ring.m == 5
    assert all(1 in f for f in ring.ring)
    # consecutive ring facets share an edge through the bone
    for a, b in zip(ring.ring, ring.ring[1:] + ring.ring[:1]):
        assert len(set(a) & set(b)) == 2


def test_octahedron_vertex_ring(octahedron):
    assert bone_ring(octahedron, (1,)).m == 4


def test_rp3_ring_orders(rp3):
    sizes = {bone_ring(rp3, b).m for b in rp3.strata(2)}
    assert sizes == {4, 5}


def test_ring_stable_star_relation(rp3):
    for b in rp3.strata(2)[:10]:
        assert bone_ring(rp3, b).m * 2 == len(rp3.stable_star(b))


def test_ring_rejects_open_bone(k4):
    with pytest.raises(NonManifoldBoneError):
        bone_ring(k4, (1, 2))


def test_ring_rejects_wrong_codimension(octahedron):
    with pytest.raises(InvalidInputError):
        bone_ring(octahedron, (1, 3))


# -- sectional curvature -----------------------------------------------------------

def test_octahedron_sectional_constant(octahedron):
    for v in octahedron.vertices:
        assert sectional_curvature(octahedron, (v,)) == Fraction(1, 3)


def test_icosahedron_sectional(icosahedron):
    assert sectional_curvature(icosahedron, (1,)) == Fraction(1, 6)


def test_rp3_sectional_values(rp3):
    spec = Counter(sectional_curvature(rp3, b) for b in rp3.strata(2))
    assert spec == {Fraction(1, 5): 27, Fraction(7, 30): 24}


def test_rp3_sectional_matches_ring_orders(rp3):
    pairs = Counter((bone_ring(rp3, b).m, sectional_curvature(rp3, b))
                    for b in rp3.strata(2))
    assert pairs == {(4, Fraction(1, 5)): 15,
                     (5, Fraction(1, 5)): 12,
                     (5, Fraction(7, 30)): 24}


def test_sectional_equals_closed_form(octahedron, icosahedron, rp3, torus13):
    for c in (octahedron, icosahedron, rp3, torus13):
        for b in c.strata(2):
            for o in itertools.permutations(b):
                petals = local_disk(c, b, o).petal_numbers
                assert sectional_curvature(c, b, o) == partition_curvature(petals)


def test_sectional_ordering_dependence_on_rp3(rp3):
    """The step construction drops the bone's head, so the value is a property
    of the ORIENTED bone.  On rp3, 30 of the 51 bones change value under
    reversal (1/5 <-> 1/3); the paper's spectrum is the sorted-bone one.
    The orientation-independence claimed by the sheet theorem fails at q=3,
    just as its Gauss-Bonnet companion does.
    """
    changed = sum(
        1 for b in rp3.strata(2)
        if len({sectional_curvature(rp3, b, o) for o in itertools.permutations(b)}) > 1)
    assert changed == 30
    over_all_orderings = Counter(
        sectional_curvature(rp3, b, o)
        for b in rp3.strata(2) for o in itertools.permutations(b))
    assert over_all_orderings == {Fraction(1, 5): 72, Fraction(7, 30): 24,
                                  Fraction(1, 3): 6}


def test_sectional_spectrum_report(rp3):
    rep = sectional_spectrum(rp3)
    assert rep.spectrum() == [(Fraction(1, 5), 27), (Fraction(7, 30), 24)]
    assert rep.total == 11
    assert rep.euler == 0


def test_sectional_spectrum_threads_deterministic(rp3):
    assert sectional_spectrum(rp3, threads=4).values == sectional_spectrum(rp3).values


def test_sectional_spectrum_needs_dimension_2(path3):
    with pytest.raises(InvalidInputError):
        sectional_spectrum(path3)


def test_sectional_on_fan_raises(fan3):
    with pytest.raises((NotGeodesicReadyError, NonManifoldBoneError)):
        [sectional_curvature(fan3, b) for b in fan3.strata(2)]


def test_sectional_agrees_with_vertex_curvature_on_surfaces(icosahedron, torus13, rp2):
    for c in (icosahedron, torus13, rp2):
        for v in c.vertices:
            assert sectional_curvature(c, (v,)) == vertex_curvature_2m(c, v)


def test_sum_of_sectional_is_euler_for_q2(octahedron, icosahedron, rp2, torus13):
    for c in (octahedron, icosahedron, rp2, torus13):
        assert sectional_spectrum(c).total == c.euler
    for name in CATALAN_NAMES:
        c = catalog_complex(name)
        assert sectional_spectrum(c).total == 2


def test_refined_octahedron_spectrum(octahedron):
    rep = sectional_spectrum(barycentric(octahedron))
    assert rep.spectrum() == [
        (Fraction(1, 18), 12), (Fraction(1, 12), 8), (Fraction(1, 9), 6)]


def test_rp3_refined_value_set(rp3):
    rep = sectional_spectrum(barycentric(rp3))
    assert set(v for v, _ in rep.spectrum()) <= {
        Fraction(1, 9), Fraction(1, 6), Fraction(2, 9), Fraction(1, 3)}


# -- local disks --------------------------------------------------------------------

def test_icosahedron_local_disk(icosahedron):
    patch = local_disk(icosahedron, (1,))
    assert patch.m == 5
    assert patch.petal_numbers == (5, 5, 5, 5, 5)
    assert set(patch.petal_bones) == {(v,) for v in (2, 3, 4, 5, 6)}
    # closed star of 1 plus the stars of its neighbours
    expected = [t for t in icosahedron.facets() if set(t) & {1, 2, 3, 4, 5, 6}]
    assert patch.facets == tuple(expected)
    assert len(patch.facets) == 15


def test_rp3_local_disk_golden(rp3):
    patch = local_disk(rp3, (1, 2))
    assert patch.m == 4
    assert patch.petal_numbers == (5, 5, 5, 5)
    assert len(patch.facets) == 12


def test_rp3_petal_partitions(rp3):
    # the RP3 figure shows an m=5 bone surrounded by petal orders (5,5,5,4,4)
    seen = Counter(tuple(sorted(local_disk(rp3, b).petal_numbers, reverse=True))
                   for b in rp3.strata(2))
    assert seen == {(5, 5, 5, 5): 15, (5, 5, 5, 5, 4): 12, (5, 5, 5, 4, 4): 24}
    assert partition_curvature((5, 5, 5, 4, 4)) == Fraction(7, 30)


def test_local_disk_dual_subgraph_connected(rp3):
    for b in rp3.strata(2)[:10]:
        patch = local_disk(rp3, b)
        adj = {f: set() for f in patch.facets}
        for a, b2 in patch.dual_edges:
            adj[a].add(b2)
            adj[b2].add(a)
        seen = {patch.facets[0]}
        frontier = [patch.facets[0]]
        while frontier:
            for w in adj[frontier.pop()]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        assert len(seen) == len(patch.facets)


def test_local_disk_rejects_bad_ordering(rp3):
    with pytest.raises(InvalidInputError):
        local_disk(rp3, (1, 2), ordering=(1, 3))


# -- sheet growth ----------------------------------------------------------------------

def test_icosahedron_sheet_is_whole_manifold(icosahedron):
    sheet = grow_sheet(icosahedron, (1,))
    assert sheet.closed
    assert len(sheet.patches) == 12
    assert sheet.facet_set == icosahedron.facets()


def test_sheet_with_max_patches_1(icosahedron):
    sheet = grow_sheet(icosahedron, (1,), max_patches=1)
    assert not sheet.closed
    assert len(sheet.patches) == 1
    assert sheet.facet_set == local_disk(icosahedron, (1,)).facets


def test_rp3_sheet_golden(rp3):
    sheet = grow_sheet(rp3, (1, 2))
    assert sheet.closed
    assert len(sheet.patches) == 51
    assert len(sheet.facet_set) == 40
    assert sum(sheet.facet_multiset.values()) == 654


def test_sheet_dual_edges_cover_dual_graph(icosahedron):
    sheet = grow_sheet(icosahedron, (1,))
    g = icosahedron.dual_graph()
    facets = icosahedron.facets()
    expect = {tuple(sorted((facets[a - 1], facets[b - 1]))) for a, b in g.edges}
    assert {tuple(sorted(e)) for e in sheet.dual_edges()} == expect
