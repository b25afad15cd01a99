"""Genus-one marked tropical curves: data, validation, circuit, contractions,
canonical forms."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import MalformedInputError, PreconditionError
from .linear import Functional

__all__ = [
    "Vertex",
    "Edge",
    "Leg",
    "TropicalCurve",
    "Circuit",
    "StabilityClass",
    "validate",
    "genus",
    "circuit",
    "stability_class",
    "valence",
    "contract_edges",
    "canonical_form",
    "canonicalize",
    "is_isomorphic",
]


@dataclass(frozen=True, order=True)
class Vertex:
    id: str
    genus: int = 0


@dataclass(frozen=True, order=True)
class Edge:
    id: str
    ends: tuple[str, str]
    length: Functional

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]

    def other(self, v: str) -> str:
        a, b = self.ends
        if v == a:
            return b
        if v == b:
            return a
        raise KeyError(v)


@dataclass(frozen=True, order=True)
class Leg:
    label: int
    at: str


@dataclass(frozen=True)
class TropicalCurve:
    """A connected marked graph with genera on vertices and symbolic lengths.

    Lengths are single generators for curves read from input; curves built
    by subdividing at a radius carry general linear forms instead.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()
    legs: tuple[Leg, ...] = ()

    @classmethod
    def build(
        cls,
        vertices: Iterable[tuple[str, int] | Vertex],
        edges: Iterable[tuple[str, str, str] | tuple[str, str, str, Functional | str] | Edge] = (),
        legs: Iterable[tuple[int, str] | Leg] | Mapping[str, Iterable[int]] = (),
    ) -> "TropicalCurve":
        """Convenience constructor.

        ``edges`` entries are ``(id, a, b)`` (length = generator ``id``) or
        ``(id, a, b, length)``; ``legs`` is a list of ``(label, vertex)`` or
        a mapping vertex -> labels.
        """
        vs = tuple(v if isinstance(v, Vertex) else Vertex(v[0], v[1]) for v in vertices)
        es = []
        for e in edges:
            if isinstance(e, Edge):
                es.append(e)
                continue
            eid, a, b, *rest = e
            length = rest[0] if rest else eid
            if isinstance(length, str):
                length = Functional.gen(length)
            es.append(Edge(eid, (a, b), length))
        if isinstance(legs, Mapping):
            ls = [Leg(lab, v) for v, labs in legs.items() for lab in labs]
        else:
            ls = [x if isinstance(x, Leg) else Leg(x[0], x[1]) for x in legs]
        return cls(vs, tuple(es), tuple(sorted(ls)))

    # -- lookups ---------------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.legs)

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise PreconditionError(f"unknown vertex {vid!r}")

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise PreconditionError(f"unknown edge {eid!r}")

    def legs_at(self, vid: str) -> tuple[int, ...]:
        return tuple(sorted(l.label for l in self.legs if l.at == vid))

    def edges_at(self, vid: str) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if vid in e.ends)

    @property
    def generators(self) -> tuple[str, ...]:
        """Sorted generator names occurring in edge lengths."""
        names: set[str] = set()
        for e in self.edges:
            names |= e.length.support
        return tuple(sorted(names))

    def has_generator_lengths(self) -> bool:
        return all(len(e.length.terms) == 1 and e.length.terms[0][1] == 1 for e in self.edges)

    def neighbours(self) -> dict[str, list[tuple[str, Edge]]]:
        adj: dict[str, list[tuple[str, Edge]]] = {v.id: [] for v in self.vertices}
        for e in self.edges:
            a, b = e.ends
            adj[a].append((b, e))
            if a != b:
                adj[b].append((a, e))
        return adj

    def component_count(self) -> int:
        adj = self.neighbours()
        seen: set[str] = set()
        comps = 0
        for start in adj:
            if start in seen:
                continue
            comps += 1
            seen.add(start)
            stack = [start]
            while stack:
                v = stack.pop()
                for w, _ in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return comps

    def is_connected(self) -> bool:
        return self.component_count() == 1


class StabilityClass(str, enum.Enum):
    STABLE = "stable"
    SEMISTABLE = "semistable"
    PRESTABLE = "prestable-only"

    def at_least(self, other: "StabilityClass") -> bool:
        rank = {StabilityClass.PRESTABLE: 0, StabilityClass.SEMISTABLE: 1, StabilityClass.STABLE: 2}
        return rank[self] >= rank[other]


@dataclass(frozen=True)
class Circuit:
    vertices: frozenset[str]
    edges: frozenset[str]


def validate(curve: TropicalCurve, derived_lengths: bool = False) -> list[str]:
    """List every violated curve invariant; empty means valid.

    With ``derived_lengths`` the requirement that lengths are distinct
    single generators is dropped (curves subdivided at a radius).
    """
    problems: list[str] = []
    ids = [v.id for v in curve.vertices]
    idset = set(ids)
    if not curve.vertices:
        problems.append("no vertices")
    if len(idset) != len(ids):
        problems.append("duplicate vertex ids")
    for v in curve.vertices:
        if not isinstance(v.genus, int) or v.genus < 0:
            problems.append(f"vertex {v.id!r} has invalid genus {v.genus!r}")
    eids = [e.id for e in curve.edges]
    if len(set(eids)) != len(eids):
        problems.append("duplicate edge ids")
    dangling = False
    for e in curve.edges:
        for end in e.ends:
            if end not in idset:
                problems.append(f"edge {e.id!r} ends at unknown vertex {end!r}")
                dangling = True
    for l in curve.legs:
        if l.at not in idset:
            problems.append(f"leg {l.label} sits on unknown vertex {l.at!r}")
    labels = sorted(l.label for l in curve.legs)
    if labels != list(range(1, len(labels) + 1)):
        problems.append(f"marking labels {labels} are not exactly 1..{len(labels)}")
    if curve.vertices and not dangling and len(idset) == len(ids):
        comps = curve.component_count()
        if comps != 1:
            problems.append("underlying graph is disconnected")
        g = len(curve.edges) - len(curve.vertices) + comps + sum(v.genus for v in curve.vertices)
        if g != 1:
            problems.append(f"total genus is {g}, expected 1")
    if derived_lengths:
        for e in curve.edges:
            if e.length.is_zero():
                problems.append(f"edge {e.id!r} has zero length")
    else:
        gens = []
        for e in curve.edges:
            if len(e.length.terms) != 1 or e.length.terms[0][1] != 1:
                problems.append(f"edge {e.id!r} length {e.length} is not a single generator")
            else:
                gens.append(e.length.terms[0][0])
        if len(set(gens)) != len(gens):
            problems.append("edge lengths are not distinct generators")
    return problems


def _genus_unchecked(curve: TropicalCurve) -> int:
    return len(curve.edges) - len(curve.vertices) + 1 + sum(v.genus for v in curve.vertices)


def genus(curve: TropicalCurve) -> int:
    """First Betti number plus the sum of vertex genera."""
    if not curve.is_connected():
        raise PreconditionError("genus is only defined for connected graphs")
    return _genus_unchecked(curve)


def circuit(curve: TropicalCurve) -> Circuit:
    """The minimal genus-one subgraph: a genus-one vertex or the unique cycle."""
    if genus(curve) != 1:
        raise PreconditionError("circuit requires a genus-one curve")
    heavy = [v.id for v in curve.vertices if v.genus]
    if heavy:
        return Circuit(frozenset(heavy), frozenset())
    # prune leaves until only the cycle is left
    deg = {v.id: 0 for v in curve.vertices}
    for e in curve.edges:
        a, b = e.ends
        deg[a] += 1
        deg[b] += 1
    alive = set(deg)
    live_edges = {e.id: e for e in curve.edges}
    leaves = [v for v, d in deg.items() if d <= 1]
    while leaves:
        v = leaves.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for eid, e in list(live_edges.items()):
            if v in e.ends:
                del live_edges[eid]
                w = e.other(v)
                deg[w] -= 1
                if w in alive and deg[w] <= 1:
                    leaves.append(w)
    return Circuit(frozenset(alive), frozenset(live_edges))


def valence(curve: TropicalCurve, vid: str) -> int:
    """Edge ends (loops count twice) plus legs at the vertex."""
    val = 0
    for e in curve.edges:
        val += (e.ends[0] == vid) + (e.ends[1] == vid)
    return val + sum(1 for l in curve.legs if l.at == vid)


def stability_class(curve: TropicalCurve) -> StabilityClass:
    stable = semistable = True
    for v in curve.vertices:
        k = valence(curve, v.id)
        if v.genus == 0:
            stable &= k >= 3
            semistable &= k >= 2
        else:
            stable &= k >= 1
            semistable &= k >= 1
    if stable:
        return StabilityClass.STABLE
    if semistable:
        return StabilityClass.SEMISTABLE
    return StabilityClass.PRESTABLE


def contract_edges(curve: TropicalCurve, edge_ids: Iterable[str]) -> tuple[TropicalCurve, dict[str, str]]:
    """Weighted contraction of an edge set.

    Each connected piece of the contracted subgraph becomes one vertex whose
    genus is the sum of the genera plus the first Betti number of the piece.
    Merged vertices are named by joining the sorted old names with ``+``.
    """
    chosen = set(edge_ids)
    known = {e.id for e in curve.edges}
    unknown = chosen - known
    if unknown:
        raise PreconditionError(f"unknown edge ids {sorted(unknown)}")
    parent = {v.id: v.id for v in curve.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in curve.edges:
        if e.id in chosen:
            a, b = find(e.ends[0]), find(e.ends[1])
            if a != b:
                parent[a] = b
    groups: dict[str, list[str]] = defaultdict(list)
    for v in curve.vertices:
        groups[find(v.id)].append(v.id)
    name_of_root = {root: "+".join(sorted(members)) for root, members in groups.items()}
    vmap = {v.id: name_of_root[find(v.id)] for v in curve.vertices}
    genus_acc: dict[str, int] = defaultdict(int)
    for v in curve.vertices:
        genus_acc[vmap[v.id]] += v.genus
    for e in curve.edges:
        if e.id in chosen:
            genus_acc[vmap[e.ends[0]]] += 1
    for root, members in groups.items():
        genus_acc[name_of_root[root]] -= len(members) - 1
    order: list[str] = []
    for v in curve.vertices:
        if vmap[v.id] not in order:
            order.append(vmap[v.id])
    vertices = tuple(Vertex(name, genus_acc[name]) for name in order)
    edges = tuple(
        Edge(e.id, (vmap[e.ends[0]], vmap[e.ends[1]]), e.length) for e in curve.edges if e.id not in chosen
    )
    legs = tuple(sorted(Leg(l.label, vmap[l.at]) for l in curve.legs))
    return TropicalCurve(vertices, edges, legs), vmap


# -- canonical forms -------------------------------------------------------------

CanonicalForm = tuple[tuple[tuple[int, tuple[int, ...]], ...], tuple[tuple[int, int], ...]]


def _encode(curve: TropicalCurve, order: Sequence[str]) -> CanonicalForm:
    pos = {v: i for i, v in enumerate(order)}
    verts = tuple((curve.vertex(v).genus, curve.legs_at(v)) for v in order)
    edges = tuple(sorted(tuple(sorted((pos[e.ends[0]], pos[e.ends[1]]))) for e in curve.edges))
    return verts, edges


def _refine(curve: TropicalCurve, colour: dict[str, tuple]) -> dict[str, tuple]:
    """Colour refinement until the partition is stable; colours are ranks."""
    adj = curve.neighbours()
    loops = {v.id: sum(1 for e in curve.edges if e.is_loop and e.ends[0] == v.id) for v in curve.vertices}
    current = colour
    while True:
        sig = {
            v: (current[v], loops[v], tuple(sorted(current[w] for w, e in adj[v] if not e.is_loop)))
            for v in current
        }
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: (ranks[sig[v]],) for v in current}
        if len(set(new.values())) == len(set(current.values())):
            return new
        current = new


def canonical_form(curve: TropicalCurve) -> CanonicalForm:
    """An isomorphism invariant that is complete for marked graphs.

    Vertex and edge names are forgotten; genera and marking labels are kept.
    Individualisation-refinement over the colour classes picks the
    lexicographically least encoding.
    """
    start = {
        v.id: (v.genus, curve.legs_at(v.id), valence(curve, v.id)) for v in curve.vertices
    }
    ranks = {s: i for i, s in enumerate(sorted(set(start.values())))}
    colour = _refine(curve, {v: (ranks[s],) for v, s in start.items()})
    best: list[CanonicalForm] = []

    def search(col: dict[str, tuple]) -> None:
        classes: dict[tuple, list[str]] = defaultdict(list)
        for v, c in col.items():
            classes[c].append(v)
        if all(len(m) == 1 for m in classes.values()):
            order = [classes[c][0] for c in sorted(classes)]
            enc = _encode(curve, order)
            if not best or enc < best[0]:
                best[:] = [enc]
            return
        target = min(c for c, m in classes.items() if len(m) > 1)
        for v in sorted(classes[target]):
            nxt = dict(col)
            nxt[v] = col[v] + (0,)
            for w in classes[target]:
                if w != v:
                    nxt[w] = col[w] + (1,)
            search(_refine(curve, nxt))

    search(colour)
    return best[0]


def canonicalize(curve: TropicalCurve) -> TropicalCurve:
    """Relabel vertices ``v0, v1, ...`` and edges ``e0, e1, ...`` canonically."""
    verts, edges = canonical_form(curve)
    names = [f"v{i}" for i in range(len(verts))]
    vs = tuple(Vertex(names[i], g) for i, (g, _) in enumerate(verts))
    es = tuple(Edge(f"e{j}", (names[a], names[b]), Functional.gen(f"e{j}")) for j, (a, b) in enumerate(edges))
    legs = tuple(sorted(Leg(lab, names[i]) for i, (_, labs) in enumerate(verts) for lab in labs))
    return TropicalCurve(vs, es, legs)


def is_isomorphic(a: TropicalCurve, b: TropicalCurve) -> bool:
    return canonical_form(a) == canonical_form(b)
