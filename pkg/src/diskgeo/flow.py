"""The geodesic flow: a permutation of ordered facets (frames).

A frame is a totally ordered facet (x_0, ..., x_q); the frame bundle holds all
f_q * (q+1)! of them.  One step drops the head x_0 and appends the vertex
opposite to it across the remaining wall; at a boundary wall (one cofacet) the
head itself is re-appended, which makes the flow rotate on the facet until a
continuation exists.  The step map is a bijection, so every orbit is a cycle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Literal

from .complexes import FVector, SimplicialComplex, generate_closure
from .errors import InvalidInputError, NotGeodesicReadyError

Frame = tuple[int, ...]
Tag = Literal["open", "closed"]


@dataclass(frozen=True)
class Orbit:
    """A cycle of the step permutation; boundary_touching records self-rotations."""

    frames: tuple[Frame, ...]
    boundary_touching: bool

    @property
    def period(self) -> int:
        return len(self.frames)


@dataclass(frozen=True)
class FlowPartition:
    orbits: tuple[Orbit, ...]
    bundle_size: int

    @property
    def ergodic(self) -> bool:
        return len(self.orbits) == 1


def _require_frame(c: SimplicialComplex, f) -> Frame:
    frame = tuple(f)
    if len(set(frame)) != len(frame):
        raise InvalidInputError(f"frame {frame} has repeated vertices")
    underlying = tuple(sorted(frame))
    if underlying not in c or len(underlying) - 1 != c.dimension:
        raise InvalidInputError(f"frame {frame} is not an ordering of a facet")
    return frame


def _extensions(c: SimplicialComplex, wall: Frame) -> tuple[int, ...]:
    # the empty wall (q = 0) is extended by every point facet
    if not wall:
        return tuple(v for (v,) in c.facets())
    return c._wall_extensions().get(tuple(sorted(wall)), ())


def _step(c: SimplicialComplex, f: Frame) -> tuple[Frame, bool]:
    tail = f[1:]
    ext = _extensions(c, tail)
    if len(ext) > 2:
        raise NotGeodesicReadyError(
            f"wall {tuple(sorted(tail))} has {len(ext)} cofacets; the flow needs 1 or 2")
    others = [v for v in ext if v != f[0]]
    if not others:
        return tail + (f[0],), True
    return tail + (others[0],), False


def step(c: SimplicialComplex, f) -> Frame:
    """Apply the geodesic permutation T once."""
    return _step(c, _require_frame(c, f))[0]


def step_inverse(c: SimplicialComplex, f) -> Frame:
    """The inverse permutation: drop the last vertex, prepend its opposite."""
    frame = _require_frame(c, f)
    wall = frame[:-1]
    ext = _extensions(c, wall)
    if len(ext) > 2:
        raise NotGeodesicReadyError(
            f"wall {tuple(sorted(wall))} has {len(ext)} cofacets; the flow needs 1 or 2")
    others = [v for v in ext if v != frame[-1]]
    head = others[0] if others else frame[-1]
    return (head,) + wall


def wall_map(c: SimplicialComplex, f) -> Frame:
    """The oriented wall crossed when stepping out of f: the ordered tail."""
    return _require_frame(c, f)[1:]


def frame_bundle_size(c: SimplicialComplex) -> int:
    q = c.dimension
    return len(c.facets()) * math.factorial(q + 1)


def iter_frames(c: SimplicialComplex) -> Iterator[Frame]:
    """All frames, facets in canonical order and orderings lexicographically."""
    for facet in c.facets():
        yield from itertools.permutations(facet)


def orbit(c: SimplicialComplex, f) -> Orbit:
    """Iterate the step map until the start frame recurs."""
    start = _require_frame(c, f)
    frames = [start]
    boundary = False
    cur, used_boundary = _step(c, start)
    boundary |= used_boundary
    cap = frame_bundle_size(c)
    while cur != start:
        frames.append(cur)
        if len(frames) > cap:
            raise AssertionError("orbit exceeded the frame bundle; step is not a bijection")
        cur, used_boundary = _step(c, cur)
        boundary |= used_boundary
    return Orbit(tuple(frames), boundary)


def orbit_partition(c: SimplicialComplex) -> FlowPartition:
    """Disjoint orbits covering the whole frame bundle, seeds in canonical order."""
    seen: set[Frame] = set()
    orbits: list[Orbit] = []
    for seed in iter_frames(c):
        if seed in seen:
            continue
        o = orbit(c, seed)
        seen.update(o.frames)
        orbits.append(o)
    size = frame_bundle_size(c)
    total = sum(o.period for o in orbits)
    if total != size:
        raise AssertionError(f"orbits cover {total} frames, bundle has {size}")
    return FlowPartition(tuple(orbits), size)


def orbit_complex(c: SimplicialComplex, o: Orbit) -> tuple[SimplicialComplex, FVector]:
    """The closed sub-complex generated by the facets an orbit visits."""
    sub = generate_closure({tuple(sorted(f)) for f in o.frames})
    return sub, sub.f_vector()


def involution_factorization(
    c: SimplicialComplex,
) -> tuple[dict[tuple[Tag, Frame], tuple[Tag, Frame]],
           dict[tuple[Tag, Frame], tuple[Tag, Frame]]]:
    """T = B o A on the doubled bundle of open/closed tagged frames.

    A maps an open frame to its stepped image tagged closed and a closed frame
    to its inverse-stepped image tagged open, so A is an involution; B swaps
    the tags.  Restricted to open tags, B o A is exactly the step map.
    """
    A: dict[tuple[Tag, Frame], tuple[Tag, Frame]] = {}
    B: dict[tuple[Tag, Frame], tuple[Tag, Frame]] = {}
    for f in iter_frames(c):
        A[("open", f)] = ("closed", _step(c, f)[0])
        A[("closed", f)] = ("open", step_inverse(c, f))
        B[("open", f)] = ("closed", f)
        B[("closed", f)] = ("open", f)
    return A, B
