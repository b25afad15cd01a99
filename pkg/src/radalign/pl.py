"""Piecewise-linear functions on a tropical curve, the radius function, and
the truncated radius ``max(radius, delta)``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from .cones import Cone
from .curve import Edge, Leg, TropicalCurve, Vertex, circuit, genus
from .errors import PreconditionError, PropertyCheckError
from .linear import Functional

__all__ = [
    "PLFunction",
    "lambda_function",
    "radii",
    "degree_on_vertex",
    "total_degree",
    "constant_function",
    "subdivide_at_radius",
    "mu_function",
    "outward_orientation",
]


@dataclass(frozen=True, eq=False)
class PLFunction:
    """Vertex values plus integer slopes.

    ``edge_slopes[e]`` is the slope walking from ``e.ends[0]`` to
    ``e.ends[1]``; the reverse flag has the opposite slope. Leg slopes point
    away from the attaching vertex.
    """

    curve: TropicalCurve
    values: Mapping[str, Functional]
    edge_slopes: Mapping[str, int]
    leg_slopes: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        bad = self.violations()
        if bad:
            raise PropertyCheckError("; ".join(bad))

    def __getitem__(self, vid: str) -> Functional:
        return self.values[vid]

    def outgoing_slope(self, edge: Edge, vid: str) -> int:
        s = self.edge_slopes[edge.id]
        if edge.is_loop:
            return 0  # the two flags cancel
        return s if edge.ends[0] == vid else -s

    def violations(self) -> list[str]:
        out = []
        for v in self.curve.vertices:
            if v.id not in self.values:
                out.append(f"no value at vertex {v.id!r}")
        if out:
            return out
        for e in self.curve.edges:
            s = self.edge_slopes.get(e.id)
            if s is None:
                out.append(f"no slope on edge {e.id!r}")
                continue
            lhs = self.values[e.ends[1]] - self.values[e.ends[0]]
            if lhs != e.length * s:
                out.append(f"edge {e.id!r}: value difference {lhs} is not {s} times {e.length}")
        for l in self.curve.legs:
            if l.label not in self.leg_slopes:
                out.append(f"no slope on leg {l.label}")
        return out


def constant_function(curve: TropicalCurve, value: Functional | None = None) -> PLFunction:
    value = value or Functional.zero()
    return PLFunction(
        curve,
        {v.id: value for v in curve.vertices},
        {e.id: 0 for e in curve.edges},
        {l.label: 0 for l in curve.legs},
    )


def outward_orientation(curve: TropicalCurve) -> dict[str, tuple[str, str]]:
    """For every edge off the circuit: (inner end, outer end)."""
    circ = circuit(curve)
    adj = curve.neighbours()
    seen = set(circ.vertices)
    queue = deque(sorted(circ.vertices))
    orient: dict[str, tuple[str, str]] = {}
    while queue:
        v = queue.popleft()
        for w, e in adj[v]:
            if e.id in circ.edges or w in seen:
                continue
            seen.add(w)
            orient[e.id] = (v, w)
            queue.append(w)
    return orient


def lambda_function(curve: TropicalCurve) -> PLFunction:
    """Distance to the circuit: sum of lengths along the unique inward path.

    Slope one walking outward on tree edges and legs, zero on the circuit.
    """
    if genus(curve) != 1:
        raise PreconditionError("the radius function needs a genus-one curve")
    circ = circuit(curve)
    orient = outward_orientation(curve)
    values = {v: Functional.zero() for v in circ.vertices}
    slopes: dict[str, int] = {}
    # BFS order guarantees inner ends are assigned first
    for eid, (inner, outer) in orient.items():
        e = curve.edge(eid)
        values[outer] = values[inner] + e.length
        slopes[eid] = 1 if e.ends[0] == inner else -1
    for eid in circ.edges:
        slopes[eid] = 0
    return PLFunction(curve, values, slopes, {l.label: 1 for l in curve.legs})


def radii(curve: TropicalCurve) -> dict[str, Functional]:
    return dict(lambda_function(curve).values)


def degree_on_vertex(plf: PLFunction, vid: str) -> int:
    """Sum of outgoing slopes over all flags (edge ends and legs) at a vertex."""
    if vid not in plf.values:
        raise PreconditionError(f"unknown vertex {vid!r}")
    total = sum(plf.outgoing_slope(e, vid) for e in plf.curve.edges if vid in e.ends)
    total += sum(plf.leg_slopes[l.label] for l in plf.curve.legs if l.at == vid)
    return total


def total_degree(plf: PLFunction) -> int:
    return sum(degree_on_vertex(plf, v.id) for v in plf.curve.vertices)


def _require_comparable(cone: Cone, delta: Functional, lam: Mapping[str, Functional]) -> dict[str, int]:
    """Sign of lambda(v) - delta for every vertex; raises if undecidable."""
    return {v: cone.compare(f, delta) for v, f in lam.items()}


def subdivide_at_radius(
    curve: TropicalCurve, delta: Functional, cone: Cone
) -> tuple[TropicalCurve, dict[str, str], frozenset[str]]:
    """Insert a vertex wherever an edge or leg strictly crosses radius delta.

    Edges with inner radius below delta and outer radius above it are split
    into ``<id>:in`` and ``<id>:out`` at a new vertex ``X:<id>``; a leg at a
    vertex strictly inside is moved to a new vertex ``X:leg<label>`` joined
    by an edge ``leg<label>:in``. New lengths are linear forms.
    """
    lam = radii(curve)
    side = _require_comparable(cone, delta, lam)
    if cone.compare(delta, Functional.zero()) < 0:
        raise PreconditionError("radius must be nonnegative on the cone")
    orient = outward_orientation(curve)
    vertices = list(curve.vertices)
    edges: list[Edge] = []
    legs: list[Leg] = []
    new: set[str] = set()
    for e in curve.edges:
        if e.id in orient:
            inner, outer = orient[e.id]
            if side[inner] < 0 and side[outer] > 0:
                x = f"X:{e.id}"
                new.add(x)
                vertices.append(Vertex(x, 0))
                edges.append(Edge(f"{e.id}:in", (inner, x), delta - lam[inner]))
                edges.append(Edge(f"{e.id}:out", (x, outer), lam[outer] - delta))
                continue
        edges.append(e)
    for l in curve.legs:
        if side[l.at] < 0:
            x = f"X:leg{l.label}"
            new.add(x)
            vertices.append(Vertex(x, 0))
            edges.append(Edge(f"leg{l.label}:in", (l.at, x), delta - lam[l.at]))
            legs.append(Leg(l.label, x))
        else:
            legs.append(l)
    out = TropicalCurve(tuple(vertices), tuple(edges), tuple(sorted(legs)))
    return out, {v.id: v.id for v in curve.vertices}, frozenset(new)


def _edge_slope(diff: Functional, length: Functional) -> int | None:
    if diff.is_zero():
        return 0
    if length.is_zero():
        return None
    name, coeff = length.terms[0]
    num = diff.coefficient(name)
    if num % coeff:
        return None
    s = num // coeff
    return s if diff == length * s else None


def mu_function(curve_delta: TropicalCurve, delta: Functional, cone: Cone) -> PLFunction:
    """The function max(lambda, delta) on a curve already subdivided at delta."""
    lam = lambda_function(curve_delta)
    side = _require_comparable(cone, delta, lam.values)
    values = {v: (lam[v] if side[v] > 0 else delta) for v in lam.values}
    slopes: dict[str, int] = {}
    for e in curve_delta.edges:
        s = _edge_slope(values[e.ends[1]] - values[e.ends[0]], e.length)
        if s is None:
            raise PreconditionError(f"max(lambda, delta) bends inside edge {e.id!r}; subdivide at the radius first")
        slopes[e.id] = s
    leg_slopes = {}
    for l in curve_delta.legs:
        if side[l.at] < 0:
            raise PreconditionError(f"leg {l.label} crosses the radius; subdivide at the radius first")
        leg_slopes[l.label] = 1
    return PLFunction(curve_delta, values, slopes, leg_slopes)
