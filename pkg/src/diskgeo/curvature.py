"""Curvature of 2-manifolds, partition curvature and the 31-theorem scan.

Everything is exact rational arithmetic.  The second-order vertex curvature

    K(v) = (2 - d(v))/6 + (2/3) * sum(1/d(w) for w in S(v))

satisfies Gauss-Bonnet exactly; the same expression evaluated on an abstract
integer partition is the partition curvature, and the scan over constrained
partitions proves the 31/32/33 threshold statements by exhaustion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .complexes import Simplex, SimplicialComplex
from .errors import InvalidInputError

Partition = tuple[int, ...]


def partition_curvature(parts: Sequence[int]) -> Fraction:
    """(2-m)/6 + (2/3) sum(1/p_k) for a partition with m parts."""
    p = tuple(parts)
    if not p or any(x < 1 for x in p):
        raise InvalidInputError("partition needs at least one positive part")
    m = len(p)
    return Fraction(2 - m, 6) + Fraction(2, 3) * sum(Fraction(1, x) for x in p)


# -- 2-manifold curvature ----------------------------------------------------

def _degrees(c: SimplicialComplex) -> dict[int, int]:
    deg = {v: 0 for v in c.vertices}
    for s in c:
        if len(s) == 2:
            deg[s[0]] += 1
            deg[s[1]] += 1
    return deg


def require_surface(c: SimplicialComplex) -> None:
    """Cheap structural test that c is a closed 2-manifold complex.

    Pure of dimension 2, every edge has exactly two triangles, and the link
    of every vertex is a single cycle.  This is the combinatorial surface
    condition; it avoids the recursive sphere recognizer.
    """
    if c.dimension != 2 or not c.is_pure:
        raise InvalidInputError("not a 2-manifold: complex is not pure of dimension 2")
    for wall in c.strata(1):
        if len(c.mirror(wall)) != 2:
            raise InvalidInputError(f"not a 2-manifold: edge {wall} lacks two triangles")
    for v in c.vertices:
        link_edges = [tuple(sorted(set(t) - {v})) for t in c.open_star((v,)) if len(t) == 3]
        nbrs: dict[int, set[int]] = {}
        for a, b in link_edges:
            nbrs.setdefault(a, set()).add(b)
            nbrs.setdefault(b, set()).add(a)
        if not nbrs or any(len(ws) != 2 for ws in nbrs.values()):
            raise InvalidInputError(f"not a 2-manifold: link of vertex {v} is not a cycle")
        seen = {min(nbrs)}
        frontier = [min(nbrs)]
        while frontier:
            cur = frontier.pop()
            for w in nbrs[cur]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) != len(nbrs):
            raise InvalidInputError(f"not a 2-manifold: link of vertex {v} is disconnected")


def _vertex_curvature(d: int, neighbour_degrees: Sequence[int]) -> Fraction:
    return Fraction(2 - d, 6) + Fraction(2, 3) * sum(Fraction(1, k) for k in neighbour_degrees)


def vertex_curvature_2m(c: SimplicialComplex, v: int, *, _checked: bool = False) -> Fraction:
    """Second-order curvature of a vertex of a closed 2-manifold."""
    if not _checked:
        require_surface(c)
    deg = _degrees(c)
    if v not in deg:
        raise InvalidInputError(f"vertex {v} is not in the complex")
    nbrs = [w for s in c if len(s) == 2 and v in s for w in s if w != v]
    return _vertex_curvature(deg[v], [deg[w] for w in nbrs])


@dataclass(frozen=True)
class CurvatureReport:
    """Per-site exact values with their total and the Euler characteristic."""

    values: Mapping[Simplex, Fraction]
    total: Fraction
    euler: int

    def value_set(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.values.values())))


def gauss_bonnet_2m(c: SimplicialComplex) -> CurvatureReport:
    """Vertex curvatures of a 2-manifold; the exact total must equal chi."""
    require_surface(c)
    deg = _degrees(c)
    adj: dict[int, list[int]] = {v: [] for v in deg}
    for s in c:
        if len(s) == 2:
            adj[s[0]].append(s[1])
            adj[s[1]].append(s[0])
    values = {(v,): _vertex_curvature(deg[v], [deg[w] for w in adj[v]]) for v in sorted(deg)}
    total = sum(values.values(), Fraction(0))
    if total != c.euler:
        raise AssertionError(f"Gauss-Bonnet failed: total {total} != chi {c.euler}")
    return CurvatureReport(values, total, c.euler)


def ih_triangle_curvature(c: SimplicialComplex, t, *, _checked: bool = False) -> Fraction:
    """Triangle curvature -1/2 + 1/a + 1/b + 1/c over the vertex degrees."""
    if not _checked:
        require_surface(c)
    tri = tuple(t)
    if tri not in c or len(tri) != 3:
        raise InvalidInputError(f"{tri} is not a triangle of the complex")
    deg = _degrees(c)
    return Fraction(-1, 2) + sum(Fraction(1, deg[v]) for v in tri)


def triangle_curvature_report(c: SimplicialComplex) -> CurvatureReport:
    require_surface(c)
    deg = _degrees(c)
    values = {
        t: Fraction(-1, 2) + sum(Fraction(1, deg[v]) for v in t)
        for t in c.strata(0)
    }
    total = sum(values.values(), Fraction(0))
    if total != c.euler:
        raise AssertionError(f"Gauss-Bonnet failed: total {total} != chi {c.euler}")
    return CurvatureReport(values, total, c.euler)


def first_order_curvature(c: SimplicialComplex, v: int, kind: str = "eberhard") -> Fraction:
    """Eberhard curvature 1 - d(v)/6, or the Levitt sum over the unit sphere."""
    if (v,) not in c:
        raise InvalidInputError(f"vertex {v} is not in the complex")
    if kind == "eberhard":
        require_surface(c)
        return 1 - Fraction(_degrees(c)[v], 6)
    if kind == "levitt":
        # 1 - f_0(S)/2 + f_1(S)/3 - ...; the k = -1 term is f_{-1} = 1 over 1
        sphere = c.unit_sphere((v,))
        total = Fraction(1, 1)
        for k, count in enumerate(sphere.f_vector().counts):
            total += Fraction((-1) ** (k + 1) * count, k + 2)
        return total
    raise InvalidInputError(f"unknown curvature kind {kind!r}")


def sphere_degree(c: SimplicialComplex, v: int) -> int:
    """Sum of the degrees over the unit sphere of v."""
    require_surface(c)
    if (v,) not in c:
        raise InvalidInputError(f"vertex {v} is not in the complex")
    deg = _degrees(c)
    nbrs = [w for s in c if len(s) == 2 and v in s for w in s if w != v]
    return sum(deg[w] for w in nbrs)


# -- partition scan ----------------------------------------------------------

def _descending_partitions(n: int, max_part: int, min_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in _descending_partitions(n - first, first, min_part):
            yield (first,) + rest


def partition_scan(n: int, *, min_part: int = 4, min_parts: int = 4,
                   exclude_part: int | None = None) -> list[tuple[Partition, Fraction]]:
    """All partitions of n with at least `min_parts` parts, parts >= `min_part`.

    The defaults reproduce the paper's filter (more than 3 parts, all parts
    larger than 3).  Descending-lex order, each partition with its exact
    curvature.
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    out = []
    for p in _descending_partitions(n, n, min_part):
        if len(p) < min_parts:
            continue
        if exclude_part is not None and exclude_part in p:
            continue
        out.append((p, partition_curvature(p)))
    return out


PAPER_NEGATIVE_33 = {
    (10, 9, 7, 7): Fraction(-2, 945),
    (10, 8, 8, 7): Fraction(-1, 210),
    (9, 9, 8, 7): Fraction(-5, 756),
    (9, 8, 8, 8): Fraction(-1, 108),
}


@dataclass(frozen=True)
class ThresholdReport:
    """Per-n scan summary plus the verdicts of the 31/32/33 and family checks."""

    rows: tuple[tuple[int, Fraction | None, tuple[Partition, ...], tuple[Partition, ...]], ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def threshold_verify(n_max: int, family_samples: Sequence[int] = (100, 1000, 10_000)) -> ThresholdReport:
    """Exhaustively check the 31 theorem up to n_max, plus the family identities."""
    if n_max < 33:
        raise InvalidInputError("n_max must be at least 33 to cover the theorem")
    rows = []
    failures: list[str] = []
    for n in range(16, n_max + 1):
        scan = partition_scan(n)
        values = [k for _, k in scan]
        minimum = min(values) if values else None
        zeros = tuple(p for p, k in scan if k == 0)
        negatives = tuple(p for p, k in scan if k < 0)
        rows.append((n, minimum, zeros, negatives))
        if n <= 31 and values and minimum <= 0:
            failures.append(f"n={n}: minimum {minimum} is not positive")
        if n == 32:
            if minimum != 0 or zeros != ((8, 8, 8, 8),) or negatives:
                failures.append(f"n=32: zero set {zeros}, negatives {negatives}")
        if n == 33:
            found = {p: k for p, k in scan if k < 0}
            if found != PAPER_NEGATIVE_33:
                failures.append(f"n=33: negative cases {found}")
    for n in list(family_samples) + [n_max]:
        if n - 12 >= 4:
            k = partition_curvature((n - 12, 4, 4, 4))
            expected = Fraction(1, 6) + Fraction(2, 3 * (n - 12))
            if k != expected or k <= 0:
                failures.append(f"family (n-12,4,4,4) at n={n}: {k} != {expected}")
    for m in range(4, 40):
        k = partition_curvature((5,) * m)
        if k != Fraction(1, 3) - Fraction(m, 30):
            failures.append(f"all-fives m={m}: {k} != 1/3 - m/30")
        if m > 10 and k >= 0:
            failures.append(f"all-fives m={m}: expected negative, got {k}")
    return ThresholdReport(tuple(rows), tuple(failures))
