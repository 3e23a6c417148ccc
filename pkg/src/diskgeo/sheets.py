"""Dual bone circles, local geodesic sheets and sectional curvature.

A bone is a codimension-2 simplex.  The facets hinging on it form its dual
circle; walking that circle with the geodesic step discovers the m adjacent
("petal") bones, and the sectional curvature of the bone is

    (2 - m)/6 + (2/3) * sum(1/p_k)

over the petal facet counts p_1..p_m.  `sectional_curvature` implements the
step-based summation (two petal contributions per ring facet, each petal seen
twice); the closed form lives in `diskgeo.curvature.partition_curvature` and
the two routes are compared exactly in the test suite, never collapsed.
"""

from __future__ import annotations

from collections import Counter, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .complexes import Simplex, SimplicialComplex
from .errors import InvalidInputError, NonManifoldBoneError
from .flow import _step

DEFAULT_MAX_PATCHES = 10_000


@dataclass(frozen=True)
class BoneRing:
    """The facets around a bone in cyclic dual order."""

    bone: Simplex
    ring: tuple[Simplex, ...]

    @property
    def m(self) -> int:
        return len(self.ring)


@dataclass(frozen=True)
class SheetPatch:
    """One local disk: a bone, its petal bones and the facets collected around them."""

    bone: Simplex
    ordering: tuple[int, ...]
    petal_bones: tuple[Simplex, ...]
    petal_numbers: tuple[int, ...]
    facets: tuple[Simplex, ...]
    dual_edges: frozenset[tuple[Simplex, Simplex]]

    @property
    def m(self) -> int:
        return len(self.petal_bones)


@dataclass(frozen=True)
class Sheet:
    """Local disks glued along shared bones, grown until closure or a patch cap."""

    patches: tuple[SheetPatch, ...]
    closed: bool
    facet_multiset: Mapping[Simplex, int]

    @property
    def facet_set(self) -> tuple[Simplex, ...]:
        return tuple(sorted(self.facet_multiset))

    def dual_edges(self) -> frozenset[tuple[Simplex, Simplex]]:
        out: set[tuple[Simplex, Simplex]] = set()
        for p in self.patches:
            out.update(p.dual_edges)
        return frozenset(out)


def _require_bone(c: SimplicialComplex, bone) -> Simplex:
    b = tuple(bone)
    if b not in c:
        raise InvalidInputError(f"bone {b} is not in the complex")
    if len(b) - 1 != c.dimension - 2:
        raise InvalidInputError(f"{b} is not a bone (codimension 2 required)")
    return b


def _ring_facets(c: SimplicialComplex, b: Simplex) -> list[Simplex]:
    return [s for s in c.stable_star(b) if len(s) == len(b) + 2]


def _dual_edges_among(facets: Iterable[Simplex], q: int) -> frozenset[tuple[Simplex, Simplex]]:
    fs = sorted(facets)
    out = set()
    for i, a in enumerate(fs):
        sa = set(a)
        for b in fs[i + 1:]:
            if len(sa & set(b)) == q:
                out.add((a, b))
    return frozenset(out)


def bone_ring(c: SimplicialComplex, bone) -> BoneRing:
    """Order the facets hinging on the bone into their single dual cycle."""
    b = _require_bone(c, bone)
    ring = _ring_facets(c, b)
    m = len(ring)
    if m < 3:
        raise NonManifoldBoneError(f"bone {b} has only {m} facets, no closed ring")
    nbrs: dict[Simplex, list[Simplex]] = {y: [] for y in ring}
    for i, y in enumerate(ring):
        for z in ring[i + 1:]:
            if len(set(y) & set(z)) == len(b) + 1:
                nbrs[y].append(z)
                nbrs[z].append(y)
    if any(len(v) != 2 for v in nbrs.values()):
        raise NonManifoldBoneError(f"facets around bone {b} do not form a single cycle")
    start = min(ring)
    walk = [start, min(nbrs[start])]
    while len(walk) < m:
        prev, cur = walk[-2], walk[-1]
        nxt = nbrs[cur][0] if nbrs[cur][0] != prev else nbrs[cur][1]
        walk.append(nxt)
    if walk[0] not in nbrs[walk[-1]]:
        raise NonManifoldBoneError(f"facets around bone {b} do not form a single cycle")
    return BoneRing(b, tuple(walk))


def _resolve_ordering(b: Simplex, ordering) -> tuple[int, ...]:
    if ordering is None:
        return b
    o = tuple(ordering)
    if tuple(sorted(o)) != b:
        raise InvalidInputError(f"ordering {o} is not a permutation of bone {b}")
    return o


def _petal_walk(c: SimplicialComplex, b: Simplex, ordering: tuple[int, ...]):
    """Replicates the listing: for each ring facet, step the flow and cut out
    the two petal bones shared with the ring neighbours.

    Yields (ring facet, neighbour facet, petal bone) twice per ring facet.
    """
    ring = _ring_facets(c, b)
    if len(ring) < 3:
        raise NonManifoldBoneError(f"bone {b} has only {len(ring)} facets, no closed ring")
    for y_set in ring:
        extras = sorted(set(y_set) - set(b))
        y = ordering + tuple(extras)
        z = _step(c, y)[0]
        nbrs = [a for a in ring if len(set(y) & set(a)) == len(b) + 1]
        if len(nbrs) != 2:
            raise NonManifoldBoneError(
                f"facet {y_set} has {len(nbrs)} ring neighbours at bone {b}, expected 2")
        for a in nbrs:
            petal = tuple(sorted(set(y) & set(z) & set(a)))
            if len(petal) != len(b):
                raise NonManifoldBoneError(
                    f"cut {petal} at bone {b} is not a bone; boundary wall in the ring")
            yield y_set, a, petal


def sectional_curvature(c: SimplicialComplex, bone, ordering=None) -> Fraction:
    """Step-based sectional curvature of a bone, exact.

    Each petal contributes 1/(3*l) with l half the size of its stable star;
    on a closed manifold l is the petal facet count.
    """
    b = _require_bone(c, bone)
    o = _resolve_ordering(b, ordering)
    ring_size = len(_ring_facets(c, b))
    total = Fraction(2 - ring_size, 6)
    for _, _, petal in _petal_walk(c, b, o):
        half_star = Fraction(len(c.stable_star(petal)), 2)
        total += 1 / (3 * half_star)
    return total


@dataclass(frozen=True)
class SectionalReport:
    values: Mapping[Simplex, Fraction]
    total: Fraction
    euler: int

    def spectrum(self) -> list[tuple[Fraction, int]]:
        return sorted(Counter(self.values.values()).items())


def sectional_spectrum(c: SimplicialComplex, threads: int = 1) -> SectionalReport:
    """Sectional curvature of every bone, with the exact total."""
    if c.dimension < 2:
        raise InvalidInputError("sectional curvature needs a complex of dimension >= 2")
    bones = c.strata(2)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            vals = list(pool.map(lambda b: sectional_curvature(c, b), bones))
    else:
        vals = [sectional_curvature(c, b) for b in bones]
    values = dict(zip(bones, vals))
    return SectionalReport(values, sum(vals, Fraction(0)), c.euler)


def local_disk(c: SimplicialComplex, bone, ordering=None) -> SheetPatch:
    """The sheet patch of a bone: ring facets plus the stable stars of its petals."""
    b = _require_bone(c, bone)
    o = _resolve_ordering(b, ordering)
    ring = _ring_facets(c, b)
    q = c.dimension
    collected: set[Simplex] = set(ring)
    petal_count: Counter[Simplex] = Counter()
    for _, _, petal in _petal_walk(c, b, o):
        petal_count[petal] += 1
        collected.update(c.stable_star(petal))
    if any(n != 2 for n in petal_count.values()):
        raise NonManifoldBoneError(f"petal bones of {b} were not each seen twice")
    petals = tuple(sorted(petal_count))
    numbers = tuple(
        sum(1 for s in c.open_star(p) if len(s) - 1 == q) for p in petals)
    facets = tuple(sorted(s for s in collected if len(s) - 1 == q))
    return SheetPatch(b, o, petals, numbers, facets, _dual_edges_among(facets, q))


def grow_sheet(c: SimplicialComplex, bone, ordering=None,
               max_patches: int = DEFAULT_MAX_PATCHES) -> Sheet:
    """Breadth-first sheet growth from a bone.

    Frontier petal bones get their ordering transported along the shared
    facet: the vertices shared with the previous bone come first, in the
    inherited order.  Revisited bones are merged (embedded growth) while the
    facet multiset keeps one count per patch membership.
    """
    b = _require_bone(c, bone)
    o = _resolve_ordering(b, ordering)
    if max_patches < 1:
        raise InvalidInputError("max_patches must be >= 1")
    patches: dict[Simplex, SheetPatch] = {}
    multiset: Counter[Simplex] = Counter()
    queue: deque[tuple[Simplex, tuple[int, ...]]] = deque([(b, o)])
    while queue and len(patches) < max_patches:
        bone_k, order_k = queue.popleft()
        if bone_k in patches:
            continue
        patch = local_disk(c, bone_k, order_k)
        patches[bone_k] = patch
        multiset.update(patch.facets)
        transported = order_k[1:]
        for petal in patch.petal_bones:
            if petal not in patches:
                new_vertex = (set(petal) - set(bone_k)).pop()
                queue.append((petal, transported + (new_vertex,)))
    closed = not any(bn not in patches for bn, _ in queue)
    return Sheet(tuple(patches.values()), closed, dict(multiset))
