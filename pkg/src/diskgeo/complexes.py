"""Finite abstract simplicial complexes and their combinatorial constructions.

A simplex is a strictly increasing tuple of positive integer vertex labels.
A complex is a finite set of simplices closed under taking non-empty subsets,
stored in canonical order (by dimension, then lexicographically).  Complexes
are immutable after construction; every operation is a pure function, so
shared complexes are safe to use concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError

Simplex = tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize a vertex collection to a simplex tuple, validating labels."""
    vs = tuple(sorted(set(vertices)))
    if not vs:
        raise InvalidInputError("a simplex needs at least one vertex")
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            raise InvalidInputError(f"vertex labels must be positive integers, got {v!r}")
    return vs


def canonical_key(s: Simplex) -> tuple[int, Simplex]:
    return (len(s), s)


@dataclass(frozen=True)
class FVector:
    """Per-dimension simplex counts f_0..f_q and the Euler characteristic."""

    counts: tuple[int, ...]
    euler: int

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on integer labels."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise InvalidInputError("duplicate vertex labels in graph")
        for a, b in self.edges:
            if a == b:
                raise InvalidInputError(f"loop edge ({a},{b}) not allowed")
            if a > b:
                raise InvalidInputError(f"edge ({a},{b}) must be stored sorted")
            if a not in vset or b not in vset:
                raise InvalidInputError(f"edge ({a},{b}) has an endpoint outside the vertex set")

    @staticmethod
    def from_edges(vertices: Iterable[int], edges: Iterable[Sequence[int]]) -> "Graph":
        es = frozenset(tuple(sorted((a, b))) for a, b in edges)
        vs = tuple(sorted(set(vertices) | {v for e in es for v in e}))
        return Graph(vs, es)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


class SimplicialComplex:
    """An immutable simplicial complex with a vertex-membership index.

    The constructor validates closure under non-empty subsets and fails
    loudly on violations; use :func:`generate_closure` to build the closure
    of an arbitrary family of sets.
    """

    __slots__ = ("_simplices", "_set", "_post", "_dim", "_hash", "_wall_ext")

    def __init__(self, simplices: Iterable[Iterable[int]]):
        sims = sorted({as_simplex(s) for s in simplices}, key=canonical_key)
        self._simplices: tuple[Simplex, ...] = tuple(sims)
        self._set = frozenset(self._simplices)
        self._dim = max((len(s) for s in self._simplices), default=0) - 1
        post: dict[int, set[int]] = {}
        for i, s in enumerate(self._simplices):
            for v in s:
                post.setdefault(v, set()).add(i)
        self._post = {v: frozenset(ix) for v, ix in post.items()}
        self._hash: int | None = None
        self._wall_ext: dict[Simplex, tuple[int, ...]] | None = None
        for s in self._simplices:
            if len(s) > 1:
                for face in itertools.combinations(s, len(s) - 1):
                    if face not in self._set:
                        raise InvalidInputError(
                            f"not closed under subsets: {s} present but {face} missing")

    # -- basic protocol ----------------------------------------------------
    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self._simplices)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self._set == other._set

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._set)
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector().counts})"

    # -- structure ---------------------------------------------------------
    @property
    def simplices(self) -> tuple[Simplex, ...]:
        return self._simplices

    @property
    def dimension(self) -> int:
        """Maximal simplex dimension; -1 for the empty complex."""
        return self._dim

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._post))

    @property
    def is_empty(self) -> bool:
        return not self._simplices

    @property
    def is_pure(self) -> bool:
        """True when every maximal simplex has the top dimension."""
        return all(len(x) - 1 == self._dim for x in self.maximal_simplices())

    def maximal_simplices(self) -> tuple[Simplex, ...]:
        return tuple(x for x in self._simplices if not self.stable_star(x))

    def strata(self, codim: int) -> tuple[Simplex, ...]:
        """Facets (codim 0), walls (codim 1) or bones (codim 2), in canonical order."""
        if codim not in (0, 1, 2):
            raise InvalidInputError(f"codimension must be 0, 1 or 2, got {codim}")
        k = self._dim - codim
        if k < 0:
            return ()
        return tuple(s for s in self._simplices if len(s) - 1 == k)

    def facets(self) -> tuple[Simplex, ...]:
        return self.strata(0)

    def f_vector(self) -> FVector:
        counts = [0] * (self._dim + 1)
        for s in self._simplices:
            counts[len(s) - 1] += 1
        euler = sum((-1) ** k * c for k, c in enumerate(counts))
        return FVector(tuple(counts), euler)

    @property
    def euler(self) -> int:
        return self.f_vector().euler

    # -- stars and spheres ---------------------------------------------------
    def _require_member(self, x) -> Simplex:
        s = tuple(x)
        if s not in self._set:
            raise InvalidInputError(f"simplex {s} is not in the complex")
        return s

    def open_star(self, x: Iterable[int]) -> tuple[Simplex, ...]:
        """U(x): all simplices containing x, in canonical order."""
        s = self._require_member(x)
        idx = frozenset.intersection(*(self._post[v] for v in s))
        return tuple(self._simplices[i] for i in sorted(idx))

    def stable_star(self, x: Iterable[int]) -> tuple[Simplex, ...]:
        """S+(x) = U(x) minus {x}: the simplices properly containing x."""
        s = self._require_member(x)
        return tuple(y for y in self.open_star(s) if y != s)

    def unit_sphere(self, x: Iterable[int]) -> "SimplicialComplex":
        """S(x): the closure of the open star minus the open star."""
        star = set(self.open_star(x))
        closure: set[Simplex] = set()
        for y in star:
            for k in range(1, len(y) + 1):
                closure.update(itertools.combinations(y, k))
        return SimplicialComplex(closure - star)

    def complement_of_star(self, x: Iterable[int]) -> "SimplicialComplex":
        """The set difference G minus U(x); always closed under subsets."""
        star = set(self.open_star(x))
        return SimplicialComplex(s for s in self._simplices if s not in star)

    # -- walls and duality ----------------------------------------------------
    def _wall_extensions(self) -> dict[Simplex, tuple[int, ...]]:
        """For each facet wall, the vertices extending it back to a facet."""
        if self._wall_ext is None:
            ext: dict[Simplex, list[int]] = {}
            for f in self.facets():
                for i in range(len(f)):
                    wall = f[:i] + f[i + 1:]
                    ext.setdefault(wall, []).append(f[i])
            self._wall_ext = {w: tuple(sorted(vs)) for w, vs in ext.items()}
        return self._wall_ext

    def mirror(self, wall: Iterable[int]) -> tuple[int, ...]:
        """Vertices v such that wall + {v} is a facet."""
        w = self._require_member(wall)
        if len(w) - 1 != self._dim - 1:
            raise InvalidInputError(f"{w} is not a wall (codimension 1 required)")
        return self._wall_extensions().get(w, ())

    def comparability_graph(self) -> Graph:
        """Vertices are 1-based canonical simplex indices, edges are strict inclusions."""
        pos = {s: i + 1 for i, s in enumerate(self._simplices)}
        edges = set()
        for s in self._simplices:
            i = pos[s]
            for t in self.stable_star(s):
                edges.add((i, pos[t]))
        return Graph(tuple(range(1, len(self._simplices) + 1)), frozenset(edges))

    def dual_graph(self) -> Graph:
        """Facet adjacency: facets are joined when they share a wall."""
        if not self.is_pure:
            raise InvalidInputError("dual graph requires a pure complex")
        fs = self.facets()
        pos = {f: i + 1 for i, f in enumerate(fs)}
        edges = set()
        for wall, exts in self._wall_extensions().items():
            cofacets = [as_simplex(wall + (v,)) for v in exts]
            for a, b in itertools.combinations(sorted(cofacets, key=canonical_key), 2):
                edges.add((pos[a], pos[b]))
        return Graph(tuple(range(1, len(fs) + 1)), frozenset(edges))


def generate_closure(sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Close a family of non-empty vertex sets under taking non-empty subsets."""
    closure: set[Simplex] = set()
    for raw in sets:
        s = as_simplex(raw)
        for k in range(1, len(s) + 1):
            closure.update(itertools.combinations(s, k))
    return SimplicialComplex(closure)


def whitney(g: Graph) -> SimplicialComplex:
    """The clique complex of a simple graph: every complete subgraph is a simplex."""
    adj = g.adjacency()
    cliques: list[Simplex] = []

    def grow(clique: Simplex, candidates: list[int]) -> None:
        for i, v in enumerate(candidates):
            ext = clique + (v,)
            cliques.append(ext)
            grow(ext, [w for w in candidates[i + 1:] if w in adj[v]])

    grow((), sorted(g.vertices))
    return SimplicialComplex(cliques)


def barycentric(c: SimplicialComplex, depth: int = 1) -> SimplicialComplex:
    """Barycentric refinement: the Whitney complex of the comparability graph.

    Vertices of the refinement are the simplices of `c`, labelled 1..n in
    canonical order; simplices are chains under strict inclusion.
    """
    if depth < 0:
        raise InvalidInputError("refinement depth must be >= 0")
    out = c
    for _ in range(depth):
        out = whitney(out.comparability_graph())
    return out
