import pytest

from diskgeo.catalog import catalog_complex
from diskgeo.complexes import generate_closure


@pytest.fixture(scope="session")
def octahedron():
    return catalog_complex("octahedron")


@pytest.fixture(scope="session")
def icosahedron():
    return catalog_complex("icosahedron")


@pytest.fixture(scope="session")
def rp2():
    return catalog_complex("rp2")


@pytest.fixture(scope="session")
def rp3():
    return catalog_complex("rp3")


@pytest.fixture(scope="session")
def torus13():
    return catalog_complex("torus13")


@pytest.fixture(scope="session")
def path3():
    return catalog_complex("path3")


@pytest.fixture(scope="session")
def triangle_boundary():
    return catalog_complex("cycle(3)")


@pytest.fixture(scope="session")
def k4():
    return catalog_complex("simplex(3)")


@pytest.fixture(scope="session")
def solid_triangle():
    return catalog_complex("simplex(2)")


@pytest.fixture(scope="session")
def fan3():
    """Three triangles glued along one edge: wall (1,2) has three cofacets."""
    return generate_closure([(1, 2, 3), (1, 2, 4), (1, 2, 5)])
