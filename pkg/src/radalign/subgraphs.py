"""Precontractible subgraphs and their (k, J) signatures.

A precontractible subgraph is empty or a connected vertex set containing
the circuit, taken with every edge between its vertices. Contracting it
gives one genus-one vertex with k unmarked half-edges (edges leaving the
subgraph) and the markings J it carried.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Sequence

from .curve import TropicalCurve, circuit, genus
from .errors import PreconditionError

__all__ = [
    "Precontractible",
    "KJSignature",
    "precontractible_subgraphs",
    "is_precontractible",
    "kj_signature",
    "kj_compare",
    "crossing_edges",
    "realized_signatures",
    "is_linear_extension",
    "standard_extensions",
    "marking_first_before",
    "random_extension",
    "resolve_contracted",
]


@dataclass(frozen=True, order=True)
class Precontractible:
    vertices: frozenset[str]
    edges: frozenset[str]

    def sort_key(self) -> tuple[int, tuple[str, ...]]:
        return (len(self.vertices), tuple(sorted(self.vertices)))

    def __bool__(self) -> bool:
        return bool(self.vertices)


@dataclass(frozen=True)
class KJSignature:
    k: int
    J: frozenset[int]

    @classmethod
    def of(cls, k: int, J: Iterable[int] = ()) -> "KJSignature":
        return cls(k, frozenset(J))

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.k, len(self.J), tuple(sorted(self.J)))

    def __str__(self) -> str:
        return f"({self.k},{{{','.join(map(str, sorted(self.J)))}}})"


def _induced(curve: TropicalCurve, verts: frozenset[str]) -> Precontractible:
    edges = frozenset(e.id for e in curve.edges if e.ends[0] in verts and e.ends[1] in verts)
    return Precontractible(verts, edges)


def _connected(curve: TropicalCurve, verts: frozenset[str]) -> bool:
    if not verts:
        return False
    adj = curve.neighbours()
    start = min(verts)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, _ in adj[v]:
            if w in verts and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def is_precontractible(curve: TropicalCurve, verts: Iterable[str]) -> bool:
    vs = frozenset(verts)
    if not vs:
        return True
    if not vs <= set(curve.vertex_ids):
        return False
    return circuit(curve).vertices <= vs and _connected(curve, vs)


def precontractible_subgraphs(curve: TropicalCurve) -> list[Precontractible]:
    """The empty subgraph, then every connected vertex set containing the
    circuit, ordered by size and then by sorted vertex names."""
    if genus(curve) != 1:
        raise PreconditionError("precontractible subgraphs need a genus-one curve")
    circ = circuit(curve).vertices
    adj = curve.neighbours()
    found = {circ}
    stack = [circ]
    while stack:
        cur = stack.pop()
        for v in cur:
            for w, _ in adj[v]:
                if w not in cur:
                    nxt = cur | {w}
                    if nxt not in found:
                        found.add(nxt)
                        stack.append(nxt)
    out = [Precontractible(frozenset(), frozenset())]
    out += sorted((_induced(curve, s) for s in found), key=Precontractible.sort_key)
    return out


def crossing_edges(curve: TropicalCurve, verts: Iterable[str]) -> tuple[str, ...]:
    vs = set(verts)
    return tuple(sorted(e.id for e in curve.edges if (e.ends[0] in vs) != (e.ends[1] in vs)))


def kj_signature(curve: TropicalCurve, sub: Precontractible | Iterable[str]) -> KJSignature:
    verts = sub.vertices if isinstance(sub, Precontractible) else frozenset(sub)
    if not verts:
        raise PreconditionError("the empty subgraph has no signature")
    if not is_precontractible(curve, verts):
        raise PreconditionError(f"{sorted(verts)} is not precontractible")
    k = len(crossing_edges(curve, verts))
    J = frozenset(l.label for l in curve.legs if l.at in verts)
    return KJSignature(k, J)


Relation = Literal["<", ">", "=", "incomparable"]


def kj_compare(a: KJSignature, b: KJSignature) -> Relation:
    """Partial order: a precedes b when a.k <= b.k and a.J is inside b.J."""
    if a == b:
        return "="
    if a.k <= b.k and a.J <= b.J:
        return "<"
    if b.k <= a.k and b.J <= a.J:
        return ">"
    return "incomparable"


def resolve_contracted(curve: TropicalCurve, contracted: Iterable[str] | None) -> frozenset[str]:
    """Validate the subgraph marked for contraction; default is the whole curve."""
    if contracted is None:
        return frozenset(curve.vertex_ids)
    vs = frozenset(contracted)
    if not is_precontractible(curve, vs):
        raise PreconditionError(f"{sorted(vs)} is not a precontractible vertex set")
    return vs


def realized_signatures(curve: TropicalCurve, contracted: Iterable[str] | None = None) -> list[KJSignature]:
    """Signatures of the nonempty precontractible subgraphs inside the
    contracted set, sorted by (k, |J|, J)."""
    top = resolve_contracted(curve, contracted)
    sigs = {kj_signature(curve, h) for h in precontractible_subgraphs(curve) if h and h.vertices <= top}
    return sorted(sigs, key=KJSignature.sort_key)


def is_linear_extension(order: Sequence[KJSignature]) -> bool:
    if len(set(order)) != len(order):
        return False
    for i, j in combinations(range(len(order)), 2):
        if kj_compare(order[j], order[i]) == "<":
            return False
    return True


def marking_first_before(a: KJSignature, b: KJSignature) -> bool:
    """Refinement of the signature order used for safe blowup sequences:
    strictly fewer markings (by inclusion) first, then fewer leaving edges.

    A subgraph whose leaving edges are a proper subset of another's is the
    other one plus complete tails, so it has more markings and fewer
    leaving edges; the original order leaves such pairs incomparable, and
    blowing up the larger one first would swallow the smaller stratum.
    """
    if a.J < b.J:
        return True
    return a.J == b.J and a.k < b.k


def standard_extensions(sigs: Iterable[KJSignature]) -> list[list[KJSignature]]:
    """Two deterministic linear extensions that also respect
    :func:`marking_first_before`; they differ in how marking sets of equal
    size are ordered."""
    sigs = list(set(sigs))
    first = sorted(sigs, key=lambda s: (len(s.J), sorted(s.J), s.k))
    second = sorted(sigs, key=lambda s: (len(s.J), [-j for j in sorted(s.J, reverse=True)], s.k))
    return [first, second]


def random_extension(
    sigs: Iterable[KJSignature], rng: random.Random, marking_first: bool = False
) -> list[KJSignature]:
    """Random topological order, choosing uniformly among minimal elements
    at each step. With ``marking_first`` the refined order is respected."""
    remaining = sorted(set(sigs), key=KJSignature.sort_key)
    out: list[KJSignature] = []

    def before(t: KJSignature, s: KJSignature) -> bool:
        return kj_compare(t, s) == "<" or (marking_first and marking_first_before(t, s))

    while remaining:
        minimal = [s for s in remaining if not any(before(t, s) for t in remaining)]
        pick = rng.choice(minimal)
        out.append(pick)
        remaining.remove(pick)
    return out
