"""Energy pushing from simplices to vertices: Poincare-Hopf divisors.

Every simplex carries the energy (-1)^dim.  A rule sends each simplex to a
facet containing it and then to a vertex of that facet; pushing the energies
along any such rule yields an integer divisor on the vertices whose total is
the Euler characteristic.  The chosen vertex may lie outside the source
simplex, which is deliberate: the rule composes a facet choice with a
per-facet vertex choice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .complexes import Simplex, SimplicialComplex
from .errors import InvalidInputError

_SEED_SPAN = 2 ** 64


@dataclass(frozen=True)
class EnergyRule:
    """simplex -> (containing facet, vertex of that facet), plus provenance."""

    assignment: Mapping[Simplex, tuple[Simplex, int]]
    provenance: str

    def vertex(self, x: Simplex) -> int:
        return self.assignment[x][1]


@dataclass(frozen=True)
class Divisor:
    indices: Mapping[int, int]
    total: int


@dataclass(frozen=True)
class SelfMap:
    """The rule restricted to vertices, as a functional graph."""

    mapping: Mapping[int, int]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def census(self) -> dict[str, int]:
        on_cycles = sum(len(cy) for cy in self.cycles)
        return {
            "components": len(self.cycles),
            "fixed_points": sum(1 for cy in self.cycles if len(cy) == 1),
            "cycle_vertices": on_cycles,
            "tree_vertices": len(self.mapping) - on_cycles,
        }


def energy(x: Simplex) -> int:
    return (-1) ** (len(x) - 1)


def _require_pure(c: SimplicialComplex) -> None:
    if c.is_empty or not c.is_pure:
        raise InvalidInputError("energy rules need a pure complex (facets must cover it)")


def _containing_facets(c: SimplicialComplex, x: Simplex) -> list[Simplex]:
    q = c.dimension
    return [s for s in c.open_star(x) if len(s) - 1 == q]


def min_rule(c: SimplicialComplex, f: Mapping[int, float],
             g: Mapping[Simplex, float]) -> EnergyRule:
    """Send x to the g-minimal facet containing it, then to its f-minimal vertex."""
    _require_pure(c)
    if len(set(f.values())) != len(f):
        raise InvalidInputError("f must be injective on vertices")
    if len(set(g.values())) != len(g):
        raise InvalidInputError("g must be injective on facets")
    facets = c.facets()
    missing = [v for v in c.vertices if v not in f]
    if missing or any(s not in g for s in facets):
        raise InvalidInputError("f must cover all vertices and g all facets")
    best_vertex = {s: min(s, key=lambda v: f[v]) for s in facets}
    assignment = {}
    for x in c:
        facet = min(_containing_facets(c, x), key=lambda s: g[s])
        assignment[x] = (facet, best_vertex[facet])
    return EnergyRule(assignment, "min_functions")


def _stream(seed: int, index: int) -> random.Random:
    # one independent, reproducible generator per (seed, index)
    return random.Random((seed % _SEED_SPAN) * _SEED_SPAN + index)


def _pick(rng: random.Random, n: int) -> int:
    return rng.getrandbits(64) % n


def random_rule(c: SimplicialComplex, seed: int) -> EnergyRule:
    """Seeded random facet choice per simplex and vertex choice per facet.

    Streams are derived from (seed, canonical index), so the rule is
    reproducible bit-for-bit and independent of evaluation order.
    """
    _require_pure(c)
    facets = c.facets()
    facet_vertex = {
        s: s[_pick(_stream(seed, 2 * i + 1), len(s))] for i, s in enumerate(facets)
    }
    assignment = {}
    for i, x in enumerate(c.simplices):
        candidates = _containing_facets(c, x)
        facet = candidates[_pick(_stream(seed, 2 * i), len(candidates))]
        assignment[x] = (facet, facet_vertex[facet])
    return EnergyRule(assignment, f"random(seed={seed})")


def min_rule_from_seed(c: SimplicialComplex, seed: int) -> EnergyRule:
    """A min rule whose injective f and g are generated from the seed."""
    _require_pure(c)
    verts = list(c.vertices)
    facets = list(c.facets())
    rng = _stream(seed, 0)
    f_order = list(range(len(verts)))
    g_order = list(range(len(facets)))
    rng.shuffle(f_order)
    rng.shuffle(g_order)
    f = {v: rank for v, rank in zip(verts, f_order)}
    g = {s: rank for s, rank in zip(facets, g_order)}
    rule = min_rule(c, f, g)
    return EnergyRule(rule.assignment, f"min_functions(seed={seed})")


def push_energy(c: SimplicialComplex, rule: EnergyRule) -> Divisor:
    """index(v) = sum of energies of the simplices the rule sends to v."""
    indices = {v: 0 for v in c.vertices}
    for x in c:
        facet, v = rule.assignment[x]
        indices[v] += energy(x)
    total = sum(indices.values())
    if total != c.euler:
        raise AssertionError(f"energy not conserved: {total} != chi {c.euler}")
    return Divisor(indices, total)


def vertex_self_map(c: SimplicialComplex, rule: EnergyRule) -> SelfMap:
    """Restrict the rule to vertices and report the cycle structure."""
    mapping = {v: rule.vertex((v,)) for v in c.vertices}
    on_cycle: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    state: dict[int, int] = {}  # 0 in progress, 1 done
    for start in sorted(mapping):
        path = []
        v = start
        while v not in state:
            state[v] = 0
            path.append(v)
            v = mapping[v]
        if state[v] == 0 and v in path:
            cyc = path[path.index(v):]
            k = cyc.index(min(cyc))
            cycles.append(tuple(cyc[k:] + cyc[:k]))
            on_cycle.update(cyc)
        for w in path:
            state[w] = 1
    return SelfMap(mapping, tuple(sorted(cycles)))
