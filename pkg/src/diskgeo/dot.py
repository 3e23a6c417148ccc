"""DOT renderings of dual graphs, orbit walks, sheets and vertex self-maps.

Nodes are named by the canonical simplex string ("1,2,3"), so output is
stable across runs.
"""

from __future__ import annotations

from collections import Counter

from .complexes import Simplex, SimplicialComplex
from .flow import Orbit
from .poincare_hopf import SelfMap
from .sheets import Sheet


def _name(s: Simplex) -> str:
    return '"' + ",".join(str(v) for v in s) + '"'


def dual_graph_dot(c: SimplicialComplex) -> str:
    g = c.dual_graph()
    facets = c.facets()
    lines = ["graph dual {"]
    for f in facets:
        lines.append(f"  {_name(f)};")
    for a, b in sorted(g.edges):
        lines.append(f"  {_name(facets[a - 1])} -- {_name(facets[b - 1])};")
    lines.append("}")
    return "\n".join(lines)


def orbit_dot(o: Orbit) -> str:
    """The orbit projected to a facet walk; repeated transitions are annotated."""
    hops = Counter()
    walk = [tuple(sorted(f)) for f in o.frames]
    for a, b in zip(walk, walk[1:] + walk[:1]):
        hops[(a, b)] += 1
    lines = ["digraph orbit {"]
    for f in sorted(set(walk)):
        lines.append(f"  {_name(f)};")
    for (a, b), n in sorted(hops.items()):
        label = f' [label="x{n}"]' if n > 1 else ""
        lines.append(f"  {_name(a)} -> {_name(b)}{label};")
    lines.append("}")
    return "\n".join(lines)


def sheet_dot(sheet: Sheet) -> str:
    lines = ["graph sheet {"]
    for f in sheet.facet_set:
        lines.append(f"  {_name(f)};")
    for a, b in sorted(sheet.dual_edges()):
        lines.append(f"  {_name(a)} -- {_name(b)};")
    lines.append("}")
    return "\n".join(lines)


def self_map_dot(sm: SelfMap) -> str:
    lines = ["digraph self_map {"]
    for v in sorted(sm.mapping):
        lines.append(f'  "{v}" -> "{sm.mapping[v]}";')
    lines.append("}")
    return "\n".join(lines)
