"""Built-in complexes and the complex/graph file formats.

The RP2 edge list and the RP3 facet list are shipped verbatim; the four
triangulated Catalan solids are shipped as facet-list data files derived once
by tools/derive_catalan_data.py and checksummed.  Loading an entry verifies
its expected f-vector and Euler characteristic.

Catalan entries are named by solid; the correspondence with the external
"Archimedean dual" dataset ordering (indices 3, 4, 7 and 11 of the
alphabetical list) is best-effort and recorded in the entry aliases.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .complexes import Graph, SimplicialComplex, generate_closure, whitney
from .errors import CatalogError, InputFormatError


def complex_from_facets(facets: list[list[int]]) -> SimplicialComplex:
    if any(not s for s in facets):
        raise InputFormatError("facet lists must be non-empty")
    return generate_closure(facets)


def complex_from_graph(vertices: list[int], edges: list[list[int]]) -> SimplicialComplex:
    for e in edges:
        if len(e) != 2:
            raise InputFormatError(f"graph edge {e} must have exactly two endpoints")
    return whitney(Graph.from_edges(vertices, edges))


def load_complex(path: str | Path, format: str = "facets-json") -> SimplicialComplex:
    """Read a complex from a facets-json or graph-json file."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc
    return parse_complex_document(doc, format, source=str(path))


def parse_complex_document(doc, format: str, source: str = "<input>") -> SimplicialComplex:
    if not isinstance(doc, dict):
        raise InputFormatError(f"{source}: top level must be a JSON object")
    if format == "facets-json":
        facets = doc.get("facets")
        if not isinstance(facets, list):
            raise InputFormatError(f"{source}: missing 'facets' array")
        _require_int_lists(facets, source)
        return complex_from_facets(facets)
    if format == "graph-json":
        edges = doc.get("edges")
        if not isinstance(edges, list):
            raise InputFormatError(f"{source}: missing 'edges' array")
        _require_int_lists(edges, source)
        vertices = doc.get("vertices", [])
        if not isinstance(vertices, list) or any(not isinstance(v, int) for v in vertices):
            raise InputFormatError(f"{source}: 'vertices' must be an array of integers")
        return complex_from_graph(vertices, edges)
    raise InputFormatError(f"unknown format {format!r}; use facets-json or graph-json")


def _require_int_lists(rows, source: str) -> None:
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise InputFormatError(f"{source}: entry {i} must be a non-empty array")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InputFormatError(f"{source}: entry {i} holds non-integer vertex {v!r}")


# -- builders ------------------------------------------------------------------

def _point() -> SimplicialComplex:
    return generate_closure([(1,)])


def _path3() -> SimplicialComplex:
    return generate_closure([(1, 2), (2, 3), (3, 4)])


def _cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise CatalogError("cycle(n) needs n >= 3")
    return generate_closure([tuple(sorted((i, i % n + 1))) for i in range(1, n + 1)])


def _simplex(q: int) -> SimplicialComplex:
    if q < 0:
        raise CatalogError("simplex(q) needs q >= 0")
    return generate_closure([tuple(range(1, q + 2))])


def _octahedron() -> SimplicialComplex:
    parts = [(1, 2), (3, 4), (5, 6)]
    forbidden = {frozenset(p) for p in parts}
    edges = [(a, b) for a in range(1, 7) for b in range(a + 1, 7)
             if frozenset((a, b)) not in forbidden]
    return whitney(Graph.from_edges(range(1, 7), edges))


ICOSAHEDRON_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 7), (3, 4, 8), (4, 5, 9), (5, 6, 10), (2, 6, 11),
    (3, 7, 8), (4, 8, 9), (5, 9, 10), (6, 10, 11), (2, 7, 11),
    (7, 8, 12), (8, 9, 12), (9, 10, 12), (10, 11, 12), (7, 11, 12),
]


def _icosahedron() -> SimplicialComplex:
    return generate_closure(ICOSAHEDRON_FACETS)


def _torus13() -> SimplicialComplex:
    residues = (1, 3, 4, 9, 10, 12)  # quadratic residues mod 13
    edges = {tuple(sorted((i, (i - 1 + k) % 13 + 1))) for i in range(1, 14) for k in residues}
    return whitney(Graph.from_edges(range(1, 14), edges))


def _data_complex(filename: str, format: str) -> SimplicialComplex:
    ref = resources.files("diskgeo").joinpath("data").joinpath(filename)
    with resources.as_file(ref) as path:
        return load_complex(path, format)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    construction: str
    expected_f: tuple[int, ...] | None
    expected_euler: int | None
    manifold_dim: int | None
    build: Callable[[], SimplicialComplex] | None  # None for parametrized families
    aliases: tuple[str, ...] = ()


_ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry("point", "one-point complex", (1,), 1, None, _point),
    CatalogEntry("path3", "closure of {12,23,34}", (4, 3), 1, None, _path3),
    CatalogEntry("cycle(n)", "boundary n-gon, n >= 3", None, 0, 1, None),
    CatalogEntry("simplex(q)", "whitney(K_{q+1})", None, 1, None, None),
    CatalogEntry("octahedron", "whitney(K_{2,2,2})", (6, 12, 8), 2, 2, _octahedron),
    CatalogEntry("icosahedron", "standard 20-facet table", (12, 30, 20), 2, 2, _icosahedron),
    CatalogEntry("rp2", "whitney of the 15-vertex, 42-edge projective plane graph",
                 (15, 42, 28), 1, 2, lambda: _data_complex("rp2.json", "graph-json")),
    CatalogEntry("rp3", "40 tetrahedra on 11 vertices",
                 (11, 51, 80, 40), 0, 3, lambda: _data_complex("rp3.json", "facets-json")),
    CatalogEntry("torus13", "whitney(circulant(13, quadratic residues))",
                 (13, 39, 26), 0, 2, _torus13),
    CatalogEntry("tetrakis_hexahedron", "kis(cube): apex on each square face",
                 (14, 36, 24), 2, 2,
                 lambda: _data_complex("tetrakis_hexahedron.json", "facets-json"),
                 aliases=("catalan11",)),
    CatalogEntry("disdyakis_dodecahedron", "barycentric refinement of the octahedron",
                 (26, 72, 48), 2, 2,
                 lambda: _data_complex("disdyakis_dodecahedron.json", "facets-json"),
                 aliases=("catalan3",)),
    CatalogEntry("pentakis_dodecahedron", "kis(dodecahedron): apex on each pentagon",
                 (32, 90, 60), 2, 2,
                 lambda: _data_complex("pentakis_dodecahedron.json", "facets-json"),
                 aliases=("catalan7",)),
    CatalogEntry("disdyakis_triacontahedron", "barycentric refinement of the icosahedron",
                 (62, 180, 120), 2, 2,
                 lambda: _data_complex("disdyakis_triacontahedron.json", "facets-json"),
                 aliases=("catalan4",)),
)

CATALAN_NAMES = ("disdyakis_dodecahedron", "disdyakis_triacontahedron",
                 "pentakis_dodecahedron", "tetrakis_hexahedron")

_CYCLE_RE = re.compile(r"^cycle[\(_-]?(\d+)\)?$")
_SIMPLEX_RE = re.compile(r"^simplex[\(_-]?(\d+)\)?$")


def catalog_entries() -> tuple[CatalogEntry, ...]:
    return _ENTRIES


def catalog_names() -> tuple[str, ...]:
    return tuple(e.name for e in _ENTRIES)


def _normalize(name: str) -> str:
    return name.strip().lower().replace("-", "_").replace(" ", "")


def catalog_complex(name: str) -> SimplicialComplex:
    """Build a catalog entry by name; verifies the expected invariants on load."""
    norm = _normalize(name)
    m = _CYCLE_RE.match(norm)
    if m:
        return _cycle(int(m.group(1)))
    m = _SIMPLEX_RE.match(norm)
    if m:
        return _simplex(int(m.group(1)))
    for entry in _ENTRIES:
        if entry.build is not None and (norm == entry.name or norm in entry.aliases):
            c = entry.build()
            fv = c.f_vector()
            if entry.expected_f is not None and fv.counts != entry.expected_f:
                raise CatalogError(
                    f"{entry.name}: f-vector {fv.counts} != expected {entry.expected_f}")
            if entry.expected_euler is not None and fv.euler != entry.expected_euler:
                raise CatalogError(
                    f"{entry.name}: euler {fv.euler} != expected {entry.expected_euler}")
            return c
    known = ", ".join(catalog_names())
    raise CatalogError(f"unknown catalog name {name!r}; available: {known}")
