#!/usr/bin/env python3
"""Derive the facet lists of the four triangulated Catalan solids.

Constructions, all purely combinatorial from the standard octahedron and
icosahedron tables:

  tetrakis hexahedron          kis(cube) = apex over each vertex ring of the
                               octahedron (cube = dual of the octahedron)
  pentakis dodecahedron        kis(dodecahedron), dodecahedron = dual of the
                               icosahedron
  disdyakis dodecahedron       barycentric refinement of the octahedron
  disdyakis triacontahedron    barycentric refinement of the icosahedron

kis(dual(M)) for a closed 2-manifold M: take the facets of M as base
vertices and the vertices of M as apexes; every consecutive facet pair in
the ring around a vertex v spans a triangle with apex v.

Writes data/<name>.json plus data/CHECKSUMS.sha256.  The outputs are
committed; re-running must reproduce them bit for bit.
"""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from diskgeo.catalog import catalog_complex  # noqa: E402
from diskgeo.complexes import barycentric, generate_closure  # noqa: E402
from diskgeo.sheets import bone_ring  # noqa: E402

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "diskgeo" / "data"


def kis_of_dual(m) -> list[list[int]]:
    """Triangle list of kis(dual(m)) for a closed 2-manifold m."""
    facet_label = {f: i + 1 for i, f in enumerate(m.facets())}
    apex_label = {v: len(facet_label) + i + 1 for i, v in enumerate(m.vertices)}
    triangles = []
    for v in m.vertices:
        ring = bone_ring(m, (v,)).ring
        for a, b in zip(ring, ring[1:] + ring[:1]):
            triangles.append(sorted((facet_label[a], facet_label[b], apex_label[v])))
    return sorted(triangles)


def facet_list(c) -> list[list[int]]:
    return [list(f) for f in c.facets()]


def main() -> None:
    octa = catalog_complex("octahedron")
    icosa = catalog_complex("icosahedron")
    solids = {
        "tetrakis_hexahedron": kis_of_dual(octa),
        "pentakis_dodecahedron": kis_of_dual(icosa),
        "disdyakis_dodecahedron": facet_list(barycentric(octa)),
        "disdyakis_triacontahedron": facet_list(barycentric(icosa)),
    }
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for name, facets in solids.items():
        doc = {"name": name, "facets": facets}
        path = DATA_DIR / f"{name}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
        counts = generate_closure(facets).f_vector()
        print(f"{name}: f={counts.counts} euler={counts.euler}")
    lines = []
    for path in sorted(DATA_DIR.glob("*.json")):
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        lines.append(f"{digest}  {path.name}")
    (DATA_DIR / "CHECKSUMS.sha256").write_text("\n".join(lines) + "\n")
    print("checksums written")


if __name__ == "__main__":
    main()
