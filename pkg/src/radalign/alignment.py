"""Radial and central alignments as labeled subdivisions of the
deformation cone, and minimal monoids of radial cells."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .cones import Cone, Fan, deformation_cone, subdivide
from .curve import StabilityClass, TropicalCurve, circuit, genus, stability_class, valence
from .errors import PreconditionError, PropertyCheckError
from .linear import Functional
from .pl import outward_orientation, radii
from .subgraphs import resolve_contracted

__all__ = [
    "RadialAlignment",
    "CentralAlignment",
    "MinimalMonoid",
    "radial_fan",
    "radial_walls",
    "order_at_point",
    "alignment_cone",
    "minimal_monoid",
    "central_alignments",
    "central_fan",
    "inward_parent",
]


@dataclass(frozen=True)
class RadialAlignment:
    """Non-circuit vertices grouped into blocks of equal radius, increasing."""

    blocks: tuple[tuple[str, ...], ...]

    @property
    def order(self) -> tuple[str, ...]:
        return tuple(v for b in self.blocks for v in b)

    def is_strict(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)


@dataclass(frozen=True)
class CentralAlignment:
    """A distinguished vertex ``pivot`` (``None`` for the zero radius), the
    ordered vertices strictly inside its circle, and the realizing cone."""

    pivot: str | None
    radius: Functional
    interior: tuple[str, ...]
    cone: Cone
    stable: bool


@dataclass(frozen=True)
class MinimalMonoid:
    generators: tuple[Functional, ...]
    free: bool


def _check_genus(curve: TropicalCurve) -> None:
    if genus(curve) != 1:
        raise PreconditionError("alignments need a genus-one curve")


def _outer_vertices(curve: TropicalCurve) -> list[str]:
    circ = circuit(curve).vertices
    return [v for v in curve.vertex_ids if v not in circ]


def radial_walls(curve: TropicalCurve) -> list[Functional]:
    lam = radii(curve)
    outer = _outer_vertices(curve)
    return [lam[v] - lam[w] for v, w in combinations(outer, 2)]


def order_at_point(curve: TropicalCurve, point: dict[str, Fraction]) -> RadialAlignment:
    """Group non-circuit vertices by their radius at a point, increasing."""
    lam = radii(curve)
    vals = {v: lam[v].evaluate(point) for v in _outer_vertices(curve)}
    blocks: list[tuple[str, ...]] = []
    for x in sorted(set(vals.values())):
        blocks.append(tuple(sorted(v for v, y in vals.items() if y == x)))
    return RadialAlignment(tuple(blocks))


def alignment_cone(curve: TropicalCurve, alignment: RadialAlignment) -> Cone:
    """Cone on which the radii obey the given blocks: equal inside a block,
    weakly increasing from block to block."""
    lam = radii(curve)
    cone = deformation_cone(curve)
    ineqs: list[Functional] = []
    eqs: list[Functional] = []
    prev: str | None = None
    for block in alignment.blocks:
        for v in block[1:]:
            eqs.append(lam[v] - lam[block[0]])
        if prev is not None:
            ineqs.append(lam[block[0]] - lam[prev])
        prev = block[0]
    return cone.with_inequalities(*ineqs).with_equalities(*eqs)


def radial_fan(curve: TropicalCurve) -> Fan:
    """Subdivide the deformation cone along every wall where two radii agree."""
    _check_genus(curve)
    lam = radii(curve)
    outer = _outer_vertices(curve)
    if len({lam[v] for v in outer}) != len(outer):
        raise PropertyCheckError("two vertices share a radius function")
    fan = subdivide(deformation_cone(curve), radial_walls(curve))
    labels = tuple(order_at_point(curve, c.sample_dict()) for c in fan.cells)
    return Fan(fan.parent, fan.cells, labels, {"mode": "radial"})


def minimal_monoid(curve: TropicalCurve, cell: Cone) -> MinimalMonoid:
    """Circuit edge lengths plus successive differences of the radii,
    read off in the cell's order (starting from radius zero)."""
    _check_genus(curve)
    circ = circuit(curve)
    lam = radii(curve)
    gens = [curve.edge(e).length for e in sorted(circ.edges)]
    label = order_at_point(curve, cell.sample_dict())
    prev = Functional.zero()
    for block in label.blocks:
        cur = lam[block[0]]
        gens.append(cur - prev)
        prev = cur
    return MinimalMonoid(tuple(gens), cell.is_free())


def inward_parent(curve: TropicalCurve) -> dict[str, str]:
    """Each non-circuit vertex mapped to its neighbour one step closer to the circuit."""
    return {outer: inner for inner, outer in outward_orientation(curve).values()}


def _greedy_outcomes(
    outer: list[str], parent: dict[str, str], circ: frozenset[str], top: frozenset[str]
) -> Iterator[tuple[tuple[str, ...], str | None]]:
    """All results of repeatedly absorbing the closest peripheral vertex
    while it belongs to ``top``.

    Yields (absorbed vertices in order, stopping vertex or None).
    """
    if not circ <= top:
        yield (), None
        return
    total = len(outer)

    def rec(inside: frozenset[str], seq: tuple[str, ...]) -> Iterator[tuple[tuple[str, ...], str | None]]:
        periphery = sorted(w for w in outer if w not in inside and parent[w] in inside)
        if not periphery:
            yield seq, None
            return
        for w in periphery:
            if w not in top or len(seq) + 1 == total:
                yield seq, w
            else:
                yield from rec(inside | {w}, seq + (w,))

    yield from rec(circ, ())


def _interior_stable(curve: TropicalCurve, inside: Iterable[str]) -> bool:
    """Stability of the open disc with crossing flags counted as legs."""
    for v in inside:
        need = 3 if curve.vertex(v).genus == 0 else 1
        if valence(curve, v) < need:
            return False
    return True


def central_alignments(curve: TropicalCurve, contracted: Iterable[str] | None = None) -> list[CentralAlignment]:
    """Central alignments relative to a subgraph marked for contraction.

    Starting from the circuit, the closest peripheral vertex is absorbed
    into the interior as long as it lies in the marked subgraph; the first
    peripheral vertex outside it (or the last vertex of the curve) fixes
    the radius. The default marks the whole curve.
    """
    _check_genus(curve)
    if not stability_class(curve).at_least(StabilityClass.STABLE):
        raise PreconditionError("central alignments need a stable curve")
    top = resolve_contracted(curve, contracted)
    circ = circuit(curve).vertices
    lam = radii(curve)
    outer = _outer_vertices(curve)
    parent = inward_parent(curve)
    base = deformation_cone(curve)
    out: list[CentralAlignment] = []
    for seq, pivot in _greedy_outcomes(outer, parent, circ, top):
        ineqs: list[Functional] = []
        chain = list(seq) + ([pivot] if pivot else [])
        for a, b in zip(chain, chain[1:]):
            ineqs.append(lam[b] - lam[a])
        if pivot is not None:
            inside = circ | set(seq)
            for u in outer:
                if u not in inside and u != pivot and parent[u] in inside:
                    ineqs.append(lam[u] - lam[pivot])
            radius = lam[pivot]
        else:
            radius = Functional.zero()
        cone = base.with_inequalities(*ineqs)
        if cone.dim != base.dim:
            raise PropertyCheckError(f"central cell for {chain} is not full-dimensional")
        interior = circ | set(seq) if pivot is not None else frozenset()
        out.append(CentralAlignment(pivot, radius, tuple(seq), cone, _interior_stable(curve, interior)))
    return out


def central_fan(curve: TropicalCurve, contracted: Iterable[str] | None = None) -> Fan:
    aligns = central_alignments(curve, contracted)
    fan = Fan(deformation_cone(curve), tuple(a.cone for a in aligns), tuple(aligns), {"mode": "central"})
    return fan.sorted()
