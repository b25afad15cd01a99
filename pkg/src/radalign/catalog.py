"""Enumeration of stable genus-one marked graphs up to isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .curve import (
    CanonicalForm,
    Edge,
    Leg,
    TropicalCurve,
    Vertex,
    canonical_form,
    canonicalize,
    contract_edges,
    stability_class,
    StabilityClass,
)
from .errors import PreconditionError
from .linear import Functional

__all__ = ["Catalog", "enumerate_stable", "specialization_poset", "splittings"]

MAX_EDGES = 8


@dataclass(frozen=True)
class Catalog:
    n: int
    max_edges: int
    curves: tuple[TropicalCurve, ...]

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.curves:
            out[len(c.edges)] = out.get(len(c.edges), 0) + 1
        return dict(sorted(out.items()))

    def __len__(self) -> int:
        return len(self.curves)

    def __iter__(self) -> Iterator[TropicalCurve]:
        return iter(self.curves)


def _smooth(n: int) -> TropicalCurve:
    return TropicalCurve((Vertex("v0", 1),), (), tuple(Leg(i, "v0") for i in range(1, n + 1)))


def splittings(curve: TropicalCurve) -> Iterator[TropicalCurve]:
    """Every stable curve with one more edge that contracts back to ``curve``.

    A vertex is either split in two along a partition of its flags (edge
    ends and legs), with the genus going to one side, or a genus-one vertex
    trades its genus for a loop.
    """
    new_e = f"e{len(curve.edges)}"
    for v in curve.vertices:
        if v.genus == 1:
            edges = curve.edges + (Edge(new_e, (v.id, v.id), Functional.gen(new_e)),)
            verts = tuple(Vertex(x.id, 0) if x.id == v.id else x for x in curve.vertices)
            yield TropicalCurve(verts, edges, curve.legs)
        flags: list[tuple[str, object]] = []
        for e in curve.edges:
            for i, end in enumerate(e.ends):
                if end == v.id:
                    flags.append(("edge", (e.id, i)))
        for l in curve.legs:
            if l.at == v.id:
                flags.append(("leg", l.label))
        w = f"{v.id}'"
        for mask in product((0, 1), repeat=len(flags)):
            side_b = [f for f, bit in zip(flags, mask) if bit]
            size_a, size_b = len(flags) - len(side_b), len(side_b)
            for g_a in ((0, 1) if v.genus == 1 else (0,)):
                g_b = v.genus - g_a
                if size_a + 1 < (3 if g_a == 0 else 1) or size_b + 1 < (3 if g_b == 0 else 1):
                    continue
                moved_ends = {x for kind, x in side_b if kind == "edge"}
                moved_legs = {x for kind, x in side_b if kind == "leg"}
                edges = []
                for e in curve.edges:
                    ends = tuple(w if (e.id, i) in moved_ends else end for i, end in enumerate(e.ends))
                    edges.append(Edge(e.id, ends, e.length))
                edges.append(Edge(new_e, (v.id, w), Functional.gen(new_e)))
                verts = tuple(Vertex(x.id, g_a) if x.id == v.id else x for x in curve.vertices) + (Vertex(w, g_b),)
                legs = tuple(sorted(Leg(l.label, w) if l.label in moved_legs else l for l in curve.legs))
                yield TropicalCurve(verts, tuple(edges), legs)


def enumerate_stable(n: int, max_edges: int) -> Catalog:
    """All stable genus-one graphs with n markings and at most ``max_edges``
    edges, one canonical representative each, sorted by edge count and then
    by canonical form."""
    if n < 1:
        raise PreconditionError("need at least one marking")
    if not 0 <= max_edges <= MAX_EDGES:
        raise PreconditionError(f"max_edges must lie in [0, {MAX_EDGES}]")
    layer: dict[CanonicalForm, TropicalCurve] = {}
    start = _smooth(n)
    layer[canonical_form(start)] = canonicalize(start)
    found: dict[CanonicalForm, TropicalCurve] = dict(layer)
    for _ in range(max_edges):
        nxt: dict[CanonicalForm, TropicalCurve] = {}
        for c in layer.values():
            for d in splittings(c):
                if stability_class(d) is not StabilityClass.STABLE:
                    continue
                key = canonical_form(d)
                if key not in nxt:
                    nxt[key] = canonicalize(d)
        if not nxt:
            break
        found.update(nxt)
        layer = nxt
    ordered = sorted(found.items(), key=lambda kv: (len(kv[0][1]), kv[0]))
    return Catalog(n, max_edges, tuple(c for _, c in ordered))


def specialization_poset(catalog: Catalog) -> list[tuple[int, str, int]]:
    """(curve index, contracted edge, index of the resulting curve)."""
    index = {canonical_form(c): i for i, c in enumerate(catalog.curves)}
    out = []
    for i, c in enumerate(catalog.curves):
        for e in c.edges:
            small, _ = contract_edges(c, [e.id])
            out.append((i, e.id, index[canonical_form(small)]))
    return out
