"""Circles around the circuit and the contraction of their interiors.

A circle is a radius ``delta``; edges crossing it from inside are
incident, edges leaving it to the outside are excident. Contracting the
interior of a suitable circle produces a graph with one singular point of
genus one whose branches are the incident edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Mapping

from .cones import Cone
from .curve import StabilityClass, TropicalCurve, circuit, contract_edges, stability_class
from .errors import PreconditionError, PropertyCheckError
from .linear import Functional
from .pl import outward_orientation, radii, subdivide_at_radius

__all__ = [
    "CircleData",
    "SingularPoint",
    "SmythGraph",
    "SemicontinuityReport",
    "radius_chain",
    "circle_data",
    "delta_m",
    "contract_circle",
    "is_m_stable",
    "contraction_radius",
    "valence_semicontinuity_check",
    "resolve_radius",
]


@dataclass(frozen=True)
class CircleData:
    radius: Functional
    incident_edges: frozenset[str]
    incident_legs: frozenset[int]
    excident_edges: frozenset[str]
    excident_legs: frozenset[int]
    interior: frozenset[str]
    boundary: frozenset[str]

    @property
    def eta(self) -> int:
        """Inner valence: number of incident edges and legs."""
        return len(self.incident_edges) + len(self.incident_legs)

    @property
    def tau(self) -> int:
        """Outer valence: number of excident edges and legs."""
        return len(self.excident_edges) + len(self.excident_legs)


def radius_chain(curve: TropicalCurve, cone: Cone) -> list[Functional]:
    """Candidate radii in increasing order on the cone.

    Candidates are zero and the vertex radii that are comparable with every
    other vertex radius on the cone (all of them on a maximal radial cell).
    Radii that agree on the cone are listed once.
    """
    lam = radii(curve)
    pool = [Functional.zero()] + sorted(set(lam.values()))
    cands = [f for f in pool if all(cone.comparable(f, g) for g in pool)]
    ordered = sorted(cands, key=cmp_to_key(cone.compare))
    out: list[Functional] = []
    for f in ordered:
        if not out or cone.compare(out[-1], f) != 0:
            out.append(f)
    return out


def circle_data(curve: TropicalCurve, cone: Cone, delta: Functional) -> CircleData:
    lam = radii(curve)
    side = {v: cone.compare(f, delta) for v, f in lam.items()}
    orient = outward_orientation(curve)
    inc_e, exc_e = set(), set()
    for eid, (inner, outer) in orient.items():
        if side[inner] < 0 <= side[outer]:
            inc_e.add(eid)
        if side[inner] <= 0 < side[outer]:
            exc_e.add(eid)
    # a leg behaves like an edge whose outer end sits at infinity
    inc_l = {l.label for l in curve.legs if side[l.at] < 0}
    exc_l = {l.label for l in curve.legs if side[l.at] <= 0}
    return CircleData(
        radius=delta,
        incident_edges=frozenset(inc_e),
        incident_legs=frozenset(inc_l),
        excident_edges=frozenset(exc_e),
        excident_legs=frozenset(exc_l),
        interior=frozenset(v for v, s in side.items() if s < 0),
        boundary=frozenset(v for v, s in side.items() if s == 0),
    )


def delta_m(curve: TropicalCurve, cone: Cone, m: int) -> Functional | None:
    """Smallest candidate radius with inner valence <= m < outer valence."""
    if not stability_class(curve).at_least(StabilityClass.SEMISTABLE):
        raise PreconditionError("smallest stable radius needs a semistable curve")
    if not 0 <= m <= curve.n - 1:
        raise PreconditionError(f"m must lie in [0, {curve.n - 1}], got {m}")
    for delta in radius_chain(curve, cone):
        cd = circle_data(curve, cone, delta)
        if cd.eta <= m < cd.tau:
            return delta
    return None


@dataclass(frozen=True)
class SingularPoint:
    """Genus-one singular point with one branch per listed component."""

    branches: tuple[str, ...]
    id: str = "E"

    @property
    def genus(self) -> int:
        return 1

    @property
    def m(self) -> int:
        return len(self.branches)

    @property
    def delta_invariant(self) -> int:
        return len(self.branches)


@dataclass(frozen=True)
class SmythGraph:
    """Components and nodes of a contracted curve plus an optional singular
    point glued to its branch components.

    The component graph alone may be disconnected and of genus zero; the
    singular point supplies the genus.
    """

    graph: TropicalCurve
    singular: SingularPoint | None = None

    @property
    def markings(self) -> frozenset[int]:
        return frozenset(l.label for l in self.graph.legs)

    def total_genus(self) -> int:
        g = self.graph
        v = len(g.vertices)
        e = len(g.edges)
        gsum = sum(x.genus for x in g.vertices)
        if self.singular is None:
            return e - v + g.component_count() + gsum
        # singular point as an extra genus-one vertex joined to each branch
        v += 1
        e += self.singular.m
        return e - v + self._components_with_singular() + gsum + 1

    def _components_with_singular(self) -> int:
        adj = {x.id: set() for x in self.graph.vertices}
        for ed in self.graph.edges:
            a, b = ed.ends
            adj[a].add(b)
            adj[b].add(a)
        if self.singular is not None:
            s = self.singular.id
            adj[s] = set(self.singular.branches)
            for b in self.singular.branches:
                adj[b].add(s)
        seen: set[str] = set()
        comps = 0
        for start in adj:
            if start in seen:
                continue
            comps += 1
            stack = [start]
            seen.add(start)
            while stack:
                x = stack.pop()
                for y in adj[x] - seen:
                    seen.add(y)
                    stack.append(y)
        return comps

    def genus_one_core(self) -> frozenset[str]:
        """Components every genus-one subcurve must contain."""
        if self.singular is not None:
            return frozenset(self.singular.branches)
        return circuit(self.graph).vertices


def resolve_radius(curve: TropicalCurve, cone: Cone, delta: Functional) -> Functional:
    """Check that delta is zero or a vertex radius on the cone, and return
    the matching candidate from the radius chain."""
    for f in radius_chain(curve, cone):
        if cone.compare(f, delta) == 0:
            return f
    raise PreconditionError(f"radius {delta} is neither zero nor a vertex radius on this cone")


def contract_circle(curve: TropicalCurve, cone: Cone, delta: Functional) -> SmythGraph:
    """Contract the open disc of radius delta to a genus-one singular point."""
    resolve_radius(curve, cone, delta)
    if cone.compare(delta, Functional.zero()) == 0:
        return SmythGraph(curve, None)
    sub, _, _ = subdivide_at_radius(curve, delta, cone)
    lam = radii(sub)
    side = {v: cone.compare(f, delta) for v, f in lam.items()}
    keep = {v for v, s in side.items() if s >= 0}
    boundary = sorted(v for v, s in side.items() if s == 0)
    for b in boundary:
        inward = [e for e in sub.edges if b in e.ends and side[e.other(b)] < 0]
        if len(inward) != 1:
            raise PropertyCheckError(f"boundary vertex {b!r} has {len(inward)} inward edges")
    vertices = tuple(v for v in sub.vertices if v.id in keep)
    edges = tuple(e for e in sub.edges if e.ends[0] in keep and e.ends[1] in keep)
    legs = tuple(l for l in sub.legs if l.at in keep)
    if len(legs) != len(sub.legs):
        raise PropertyCheckError("a marking was lost in the contraction")
    sid = "E"
    ids = {v.id for v in vertices}
    while sid in ids:
        sid += "'"
    graph = TropicalCurve(vertices, edges, legs)
    return SmythGraph(graph, SingularPoint(tuple(boundary), sid))


def _genus_one_subcurves(smyth: SmythGraph) -> list[frozenset[str]]:
    """Every connected set of components containing the genus-one core."""
    g = smyth.graph
    core = smyth.genus_one_core()
    adj: dict[str, set[str]] = {v.id: set() for v in g.vertices}
    for e in g.edges:
        a, b = e.ends
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    seen = {core}
    frontier = [core]
    while frontier:
        cur = frontier.pop()
        nbrs = set().union(*(adj[x] for x in cur)) - cur
        for v in sorted(nbrs):
            nxt = cur | {v}
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def is_m_stable(smyth: SmythGraph, m: int) -> bool:
    """Graph-level m-stability.

    The singular point may have at most m branches, and each connected
    genus-one subcurve must meet the rest of the curve in more than m
    points once markings are counted.
    """
    if smyth.singular is not None and smyth.singular.m > m:
        return False
    g = smyth.graph
    for sub in _genus_one_subcurves(smyth):
        external = sum(1 for e in g.edges if (e.ends[0] in sub) != (e.ends[1] in sub))
        marked = sum(1 for l in g.legs if l.at in sub)
        if external + marked <= m:
            return False
    return True


def contraction_radius(curve: TropicalCurve, cone: Cone, labeling: Mapping[str, int]) -> Functional:
    """Smallest radius of a vertex carrying positive degree."""
    ids = set(curve.vertex_ids)
    for v, d in labeling.items():
        if v not in ids:
            raise PreconditionError(f"degree given for unknown vertex {v!r}")
        if not isinstance(d, int) or d < 0:
            raise PreconditionError(f"degree on {v!r} must be a nonnegative integer")
    lam = radii(curve)
    positive = [lam[v] for v in curve.vertex_ids if labeling.get(v, 0) > 0]
    if not positive:
        raise PreconditionError("degree labeling is zero on every vertex")
    return min(positive, key=cmp_to_key(cone.compare))


@dataclass(frozen=True)
class SemicontinuityReport:
    contracted: tuple[str, ...]
    specialization: tuple[int, int]
    generization: tuple[int, int]

    @property
    def ok(self) -> bool:
        return self.generization[0] <= self.specialization[0] and self.generization[1] >= self.specialization[1]


def valence_semicontinuity_check(
    curve: TropicalCurve, cone: Cone, delta: Functional, edge_ids: Iterable[str]
) -> SemicontinuityReport:
    """Compare (inner, outer) valence before and after contracting edges.

    The contracted curve is read over the face of the cone where the
    contracted lengths vanish. The face must keep every other edge length
    positive, otherwise it is not a generization of this cone.
    """
    chosen = tuple(sorted(set(edge_ids)))
    _, _ = contract_edges(curve, chosen)  # validates ids
    gone: set[str] = set()
    for eid in chosen:
        gone |= curve.edge(eid).length.support
    if delta.support & gone:
        raise PreconditionError("radius involves the length of a contracted edge")
    face = cone.restrict_to_face(gone)
    for e in curve.edges:
        if e.id not in chosen and face.sign(e.length) != 1:
            raise PreconditionError(f"on this face edge {e.id!r} would also have length zero")
    small, _ = contract_edges(curve, chosen)
    keep = [g for g in cone.ambient if g not in gone]
    small_cone = face.project(keep)
    before = circle_data(curve, cone, delta)
    after = circle_data(small, small_cone, delta)
    return SemicontinuityReport(chosen, (before.eta, before.tau), (after.eta, after.tau))
