"""Partition curvature, 2-manifold Gauss-Bonnet, the 31 theorem."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskgeo.catalog import CATALAN_NAMES, catalog_complex
from diskgeo.curvature import (
    first_order_curvature,
    gauss_bonnet_2m,
    ih_triangle_curvature,
    partition_curvature,
    partition_scan,
    sphere_degree,
    threshold_verify,
    triangle_curvature_report,
    vertex_curvature_2m,
)
from diskgeo.errors import InvalidInputError


# -- partition curvature ----------------------------------------------------------

@pytest.mark.parametrize("parts,expected", [
    ((5, 5, 5, 4, 4), Fraction(7, 30)),
    ((8, 8, 8, 8), Fraction(0)),
    ((10, 9, 7, 7), Fraction(-2, 945)),
    ((6, 6, 6, 6, 6), Fraction(1, 18)),
    ((8, 8, 6, 6), Fraction(1, 18)),
    ((8, 8, 8, 4, 4, 4), Fraction(1, 12)),
    ((6, 6, 6, 6, 4, 4, 4, 4), Fraction(1, 9)),
])
def test_partition_curvature_paper_values(parts, expected):
    assert partition_curvature(parts) == expected


@pytest.mark.parametrize("m", [1, 2, 4, 7, 19])
def test_all_fours_curvature_is_third(m):
    assert partition_curvature((4,) * m) == Fraction(1, 3)


def test_partition_curvature_rejects_bad_parts():
    with pytest.raises(InvalidInputError):
        partition_curvature(())
    with pytest.raises(InvalidInputError):
        partition_curvature((4, 0))


@given(st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=12))
@settings(max_examples=80)
def test_partition_curvature_formula(parts):
    m = len(parts)
    expected = Fraction(2 - m, 6) + Fraction(2, 3) * sum(Fraction(1, p) for p in parts)
    assert partition_curvature(parts) == expected


# -- vertex curvature --------------------------------------------------------------

def test_icosahedron_vertex_curvature(icosahedron):
    assert vertex_curvature_2m(icosahedron, 1) == Fraction(1, 6)


def test_octahedron_vertex_curvature(octahedron):
    assert vertex_curvature_2m(octahedron, 1) == Fraction(1, 3)


def test_flat_torus_vertex_curvature(torus13):
    # degree 6 with all neighbours degree 6
    assert all(vertex_curvature_2m(torus13, v) == 0 for v in torus13.vertices)


def test_vertex_curvature_rejects_non_surface(path3, k4):
    for c in (path3, k4):
        with pytest.raises(InvalidInputError):
            vertex_curvature_2m(c, 1)


def test_vertex_curvature_equals_neighbour_partition(rp2):
    deg = {v: sum(1 for s in rp2 if len(s) == 2 and v in s) for v in rp2.vertices}
    for v in rp2.vertices:
        nbrs = [w for s in rp2 if len(s) == 2 and v in s for w in s if w != v]
        parts = tuple(sorted((deg[w] for w in nbrs), reverse=True))
        assert vertex_curvature_2m(rp2, v) == partition_curvature(parts)


# -- Gauss-Bonnet -------------------------------------------------------------------

def test_gauss_bonnet_icosahedron(icosahedron):
    rep = gauss_bonnet_2m(icosahedron)
    assert rep.total == 2 == rep.euler
    assert rep.value_set() == (Fraction(1, 6),)


def test_gauss_bonnet_torus(torus13):
    rep = gauss_bonnet_2m(torus13)
    assert rep.total == 0 == rep.euler
    assert rep.value_set() == (Fraction(0),)


def test_gauss_bonnet_rp2(rp2):
    rep = gauss_bonnet_2m(rp2)
    assert rep.total == 1 == rep.euler


@pytest.mark.parametrize("name", CATALAN_NAMES)
def test_gauss_bonnet_catalans_positive(name):
    rep = gauss_bonnet_2m(catalog_complex(name))
    assert rep.total == 2
    assert all(v > 0 for v in rep.values.values())


# -- triangle curvature ---------------------------------------------------------------

def test_icosahedron_triangle_curvature(icosahedron):
    for t in icosahedron.strata(0):
        assert ih_triangle_curvature(icosahedron, t) == Fraction(1, 10)


def test_triangle_curvature_degree_cases(octahedron, torus13):
    # all degrees 4: 3/4 - 1/2 = 1/4; all degrees 6: 0
    assert ih_triangle_curvature(octahedron, octahedron.strata(0)[0]) == Fraction(1, 4)
    assert ih_triangle_curvature(torus13, torus13.strata(0)[0]) == 0


def test_triangle_redistribution_identity(rp2, icosahedron):
    for c in (rp2, icosahedron):
        for v in c.vertices:
            triangles = [t for t in c.strata(0) if v in t]
            redistributed = sum(
                (ih_triangle_curvature(c, t) for t in triangles),
                Fraction(0)) / 3
            assert redistributed == vertex_curvature_2m(c, v)


def test_triangle_report_total(rp2, torus13):
    assert triangle_curvature_report(rp2).total == 1
    assert triangle_curvature_report(torus13).total == 0


# -- first order curvature ---------------------------------------------------------------

def test_first_order_icosahedron(icosahedron):
    assert first_order_curvature(icosahedron, 1, "eberhard") == Fraction(1, 6)
    assert first_order_curvature(icosahedron, 1, "levitt") == Fraction(1, 6)


def test_first_order_octahedron(octahedron):
    assert first_order_curvature(octahedron, 1, "eberhard") == Fraction(1, 3)
    assert first_order_curvature(octahedron, 1, "levitt") == Fraction(1, 3)


def test_eberhard_equals_levitt_on_surfaces(rp2, torus13):
    for c in (rp2, torus13):
        for v in c.vertices:
            assert (first_order_curvature(c, v, "eberhard")
                    == first_order_curvature(c, v, "levitt"))


def test_degree_seven_eberhard(rp2):
    deg = {v: sum(1 for s in rp2 if len(s) == 2 and v in s) for v in rp2.vertices}
    v7 = next(v for v, d in deg.items() if d == 7)
    assert first_order_curvature(rp2, v7, "eberhard") == Fraction(-1, 6)


def test_levitt_on_non_manifold(k4):
    # levitt curvature is defined on any complex; K4's vertices sum to chi = 1
    total = sum((first_order_curvature(k4, v, "levitt") for v in k4.vertices),
                Fraction(0))
    assert total == 1


def test_first_order_rejects_unknown_kind(octahedron):
    with pytest.raises(InvalidInputError):
        first_order_curvature(octahedron, 1, "gauss")


# -- sphere degree ------------------------------------------------------------------------

def test_sphere_degree(icosahedron, octahedron):
    assert sphere_degree(icosahedron, 1) == 25
    assert sphere_degree(octahedron, 1) == 16


def test_sphere_degree_31_bound(icosahedron, octahedron, torus13, rp2):
    for c in (icosahedron, octahedron, torus13, rp2):
        for v in c.vertices:
            if sphere_degree(c, v) <= 31:
                assert vertex_curvature_2m(c, v) > 0


# -- partition scan ------------------------------------------------------------------------

def test_scan_orders_and_filters():
    scan = partition_scan(16)
    assert scan == [((4, 4, 4, 4), Fraction(1, 3))]
    scan = partition_scan(20, min_part=5)
    assert scan == [((5, 5, 5, 5), Fraction(1, 5))]
    assert all(4 not in p for p, _ in partition_scan(33, exclude_part=4))


def test_scan_31_strictly_positive():
    assert min(k for _, k in partition_scan(31)) > 0


def test_scan_32_zero_set():
    zeros = [p for p, k in partition_scan(32) if k == 0]
    assert zeros == [(8, 8, 8, 8)]
    assert not [p for p, k in partition_scan(32) if k < 0]


def test_scan_33_negative_cases():
    negatives = {p: k for p, k in partition_scan(33) if k < 0}
    assert negatives == {
        (10, 9, 7, 7): Fraction(-2, 945),
        (10, 8, 8, 7): Fraction(-1, 210),
        (9, 9, 8, 7): Fraction(-5, 756),
        (9, 8, 8, 8): Fraction(-1, 108),
    }


def test_scan_descending_lex_order():
    scan = partition_scan(20)
    assert scan[0][0] == (8, 4, 4, 4)
    partitions = [p for p, _ in scan]
    assert partitions == sorted(partitions, reverse=True)


# -- threshold verification ---------------------------------------------------------------

def test_threshold_verify_passes():
    report = threshold_verify(33)
    assert report.ok


def test_threshold_verify_rows():
    report = threshold_verify(35)
    by_n = {row[0]: row for row in report.rows}
    assert by_n[31][1] > 0
    assert by_n[32][2] == ((8, 8, 8, 8),)
    assert len(by_n[33][3]) == 4


def test_threshold_family_values():
    assert partition_curvature((88, 4, 4, 4)) == Fraction(1, 6) + Fraction(1, 132)
    assert partition_curvature((5,) * 11) == Fraction(-1, 30)
    for m in range(4, 30):
        assert partition_curvature((5,) * m) == Fraction(1, 3) - Fraction(m, 30)


def test_threshold_verify_needs_33():
    with pytest.raises(InvalidInputError):
        threshold_verify(32)
