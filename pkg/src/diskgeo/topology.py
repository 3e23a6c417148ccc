"""Recursive recognition of contractible complexes, spheres and manifolds.

The definitions are the inductive ones: the empty complex is the (-1)-sphere,
the one-point complex is contractible, a complex is contractible when some
vertex has a contractible unit sphere and a contractible star complement, a
d-sphere is a d-manifold with a contractible star complement, and a q-manifold
is a pure complex in which every unit sphere is a (q-1)-sphere.

Recognition is super-polynomial, so results are memoized on a canonical form
of the complex: vertices are relabelled by a colour-refinement pass over the
membership profile of the 1-skeleton, and verdicts are reused only for
literally equal canonical forms (no isomorphism testing).  A size ceiling
aborts instead of running forever.  The memo cache is only appended to, which
is safe for concurrent readers under the GIL.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import dataclass, field

from .complexes import Simplex, SimplicialComplex
from .errors import RecognitionLimitError

DEFAULT_CEILING = 50_000

_memo: dict[tuple, bool] = {}


def clear_recognition_cache() -> None:
    _memo.clear()


@dataclass(frozen=True)
class TopologyVerdict:
    """Outcome of a recognition check.

    kind is one of "geodesic_ready", "contractible", "sphere", "manifold" or
    "none"; witness is the vertex realising the recursive definition when one
    exists; wall_census maps each wall to its cofacet count.
    """

    kind: str
    witness: int | None = None
    wall_census: dict[Simplex, int] = field(default_factory=dict)

    @property
    def boundary_walls(self) -> tuple[Simplex, ...]:
        return tuple(w for w, n in sorted(self.wall_census.items()) if n == 1)


@contextmanager
def _recursion_headroom():
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 100_000))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def canonical_form(c: SimplicialComplex) -> frozenset[Simplex]:
    """Relabel vertices 1..n by colour refinement over the 1-skeleton.

    The relabelling is deterministic and maps many isomorphic links to the
    same literal simplex set, which is what makes the memo cache effective.
    Ties inside a colour class are broken by original label, so isomorphic
    complexes may still canonicalize differently; that only costs a cache
    miss, never a wrong verdict.
    """
    verts = c.vertices
    if not verts:
        return frozenset()
    profile: dict[int, list[int]] = {v: [0] * (c.dimension + 1) for v in verts}
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for s in c:
        for v in s:
            profile[v][len(s) - 1] += 1
        if len(s) == 2:
            adj[s[0]].add(s[1])
            adj[s[1]].add(s[0])
    colour = {v: tuple(profile[v]) for v in verts}
    n_classes = len(set(colour.values()))
    while True:
        refined = {v: (colour[v], tuple(sorted(colour[w] for w in adj[v]))) for v in verts}
        palette = {col: i for i, col in enumerate(sorted(set(refined.values())))}
        colour = {v: palette[refined[v]] for v in verts}
        if len(palette) == n_classes:
            break
        n_classes = len(palette)
    order = sorted(verts, key=lambda v: (colour[v], v))
    relabel = {v: i + 1 for i, v in enumerate(order)}
    return frozenset(tuple(sorted(relabel[v] for v in s)) for s in c)


def _check_ceiling(c: SimplicialComplex, ceiling: int | None) -> None:
    if ceiling is not None and len(c) > ceiling:
        raise RecognitionLimitError(len(c), ceiling)


def _contractible(c: SimplicialComplex) -> bool:
    if c.is_empty:
        return False
    if len(c) == 1:
        return True  # the one-point complex
    key = ("contractible", canonical_form(c))
    hit = _memo.get(key)
    if hit is not None:
        return hit
    result = False
    for v in c.vertices:
        if _contractible(c.unit_sphere((v,))) and _contractible(c.complement_of_star((v,))):
            result = True
            break
    _memo[key] = result
    return result


def _sphere(c: SimplicialComplex, d: int, fast: bool) -> bool:
    if d == -1:
        return c.is_empty
    if c.is_empty:
        return False
    key = ("sphere", d, fast, canonical_form(c))
    hit = _memo.get(key)
    if hit is not None:
        return hit
    result = _manifold(c, d, fast) and any(
        _contractible(c.complement_of_star((v,))) for v in c.vertices)
    _memo[key] = result
    return result


def _manifold(c: SimplicialComplex, q: int, fast: bool) -> bool:
    if c.is_empty or c.dimension != q or not c.is_pure:
        return False
    key = ("manifold", q, fast, canonical_form(c))
    hit = _memo.get(key)
    if hit is not None:
        return hit
    probes = [(v,) for v in c.vertices] if fast else list(c)
    result = all(_sphere(c.unit_sphere(x), q - 1, fast) for x in probes)
    _memo[key] = result
    return result


def is_contractible(c: SimplicialComplex, *, ceiling: int | None = DEFAULT_CEILING) -> bool:
    """True iff c collapses to a point under the recursive definition."""
    _check_ceiling(c, ceiling)
    with _recursion_headroom():
        return _contractible(c)


def contraction_witness(c: SimplicialComplex,
                        *, ceiling: int | None = DEFAULT_CEILING) -> int | None:
    """First vertex (canonical order) with contractible sphere and complement."""
    _check_ceiling(c, ceiling)
    with _recursion_headroom():
        for v in c.vertices:
            if _contractible(c.unit_sphere((v,))) and _contractible(c.complement_of_star((v,))):
                return v
    return None


def is_sphere(c: SimplicialComplex, d: int,
              *, fast: bool = False, ceiling: int | None = DEFAULT_CEILING) -> bool:
    """True iff c is a d-sphere (d = -1 accepts exactly the empty complex)."""
    _check_ceiling(c, ceiling)
    with _recursion_headroom():
        return _sphere(c, d, fast)


def is_manifold(c: SimplicialComplex, q: int,
                *, fast: bool = False, ceiling: int | None = DEFAULT_CEILING) -> bool:
    """True iff every unit sphere of c is a (q-1)-sphere.

    The default checks the unit sphere of every simplex, the literal reading
    of the definition; fast=True restricts the probes to vertices, which is a
    heuristic (it can accept complexes whose higher links are not spheres).
    """
    _check_ceiling(c, ceiling)
    with _recursion_headroom():
        return _manifold(c, q, fast)


def geodesic_readiness(c: SimplicialComplex) -> TopologyVerdict:
    """Pure and every wall has one or two cofacets: the flow is defined.

    For a pure 0-dimensional complex the single empty wall is shared by all
    points, so readiness means at most two of them.
    """
    if not c.is_pure:
        return TopologyVerdict("none")
    if c.dimension == 0:
        census = {(): len(c.facets())}
    else:
        census = {w: len(c.mirror(w)) for w in c.strata(1)}
    ready = all(1 <= n <= 2 for n in census.values())
    return TopologyVerdict("geodesic_ready" if ready else "none", wall_census=census)
