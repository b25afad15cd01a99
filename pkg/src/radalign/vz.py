"""Iterated blowup of the deformation cone along (k, J) strata, and its
comparison with the central-alignment fan.

Blowing up the stratum of a precontractible subgraph H with k >= 2 leaving
edges is, on cones, the subdivision that imposes which peripheral radius
is smallest. It only touches cells that still have the coordinate cone of
H's leaving edges as a face; once a cell has been split there, later
signatures whose coordinate cone contains that face see its proper
transform and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .alignment import central_fan
from .cones import Cone, Fan, deformation_cone, fans_equal
from .curve import StabilityClass, TropicalCurve, stability_class
from .errors import PreconditionError
from .pl import outward_orientation, radii
from .subgraphs import (
    KJSignature,
    crossing_edges,
    is_linear_extension,
    kj_signature,
    precontractible_subgraphs,
    realized_signatures,
    resolve_contracted,
    standard_extensions,
)

__all__ = ["vz_fan", "blowup_centers", "EquivalenceReport", "vz_equivalence", "check_order", "order_hazards"]


def check_order(curve: TropicalCurve, order: Sequence[KJSignature], contracted: Iterable[str] | None = None) -> None:
    if not is_linear_extension(order):
        raise PreconditionError("signature order is not a linear extension of the partial order")
    missing = set(realized_signatures(curve, contracted)) - set(order)
    if missing:
        shown = ", ".join(str(s) for s in sorted(missing, key=KJSignature.sort_key))
        raise PreconditionError(f"signature order misses realized signatures {shown}")


def blowup_centers(
    curve: TropicalCurve, contracted: Iterable[str] | None = None
) -> list[tuple[KJSignature, frozenset[str], tuple[str, ...]]]:
    """(signature, vertex set, leaving edges) for each nonempty
    precontractible subgraph inside the contracted set."""
    top = resolve_contracted(curve, contracted)
    out = []
    for h in precontractible_subgraphs(curve):
        if h and h.vertices <= top:
            out.append((kj_signature(curve, h), h.vertices, crossing_edges(curve, h.vertices)))
    return out


def _split_by_minimum(cell: Cone, radii_list: list) -> list[Cone]:
    pieces = []
    for i, r in enumerate(radii_list):
        piece = cell.with_inequalities(*(s - r for j, s in enumerate(radii_list) if j != i))
        if piece.dim == cell.dim:
            pieces.append(piece)
    return pieces


def vz_fan(
    curve: TropicalCurve, order: Sequence[KJSignature], contracted: Iterable[str] | None = None
) -> Fan:
    """Process signatures in order, splitting every cell that still meets
    the stratum of a matching subgraph by the minimal peripheral radius."""
    if not stability_class(curve).at_least(StabilityClass.STABLE):
        raise PreconditionError("the blowup fan needs a stable curve")
    check_order(curve, order, contracted)
    lam = radii(curve)
    orient = outward_orientation(curve)
    base = deformation_cone(curve)
    ambient = base.ambient
    centers = blowup_centers(curve, contracted)
    cells = [base]
    for sig in order:
        for s, verts, leaving in centers:
            if s != sig or len(leaving) < 2:
                continue
            gens = [curve.edge(e).length.terms[0][0] for e in leaving]
            unit = {g: tuple(1 if a == g else 0 for a in ambient) for g in gens}
            centre = tuple(sum(unit[g][i] for g in gens) for i in range(len(ambient)))
            target = set(unit.values())
            outer_ends = [orient[e][1] for e in leaving]
            periphery = [lam[w] for w in outer_ends]
            nxt: list[Cone] = []
            for c in cells:
                if c.contains(centre) and set(c.minimal_face_rays(centre)) == target:
                    nxt.extend(_split_by_minimum(c, periphery))
                else:
                    nxt.append(c)
            cells = nxt
    return Fan(base, tuple(cells), None, {"mode": "vz", "order": [str(s) for s in order]}).sorted()


def order_hazards(
    curve: TropicalCurve, order: Sequence[KJSignature], contracted: Iterable[str] | None = None
) -> list[tuple[KJSignature, KJSignature]]:
    """Pairs (earlier, later) where the earlier blowup swallows the later one.

    This happens when the earlier subgraph's leaving edges (at least two)
    form a proper subset of the later one's: its centre is then a proper
    face of the later centre, which stops being a cone of the fan.
    """
    pos = {s: i for i, s in enumerate(order)}
    centers = [(s, set(k)) for s, _, k in blowup_centers(curve, contracted) if len(k) >= 2]
    out = set()
    for s_late, k_late in centers:
        for s_early, k_early in centers:
            if k_early < k_late and pos[s_early] < pos[s_late]:
                out.add((s_early, s_late))
    return sorted(out, key=lambda p: (p[0].sort_key(), p[1].sort_key()))


@dataclass
class EquivalenceReport:
    contracted: tuple[str, ...]
    orders: list[list[KJSignature]]
    central_cells: int
    vz_cells: list[int]
    vz_equals_central: list[bool]
    orders_agree: list[bool]
    hazards: list[list[tuple[KJSignature, KJSignature]]] = field(default_factory=list)
    fans: dict[str, Fan] = field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return all(self.vz_equals_central) and all(self.orders_agree)


def vz_equivalence(
    curve: TropicalCurve,
    contracted: Iterable[str] | None = None,
    orders: Sequence[Sequence[KJSignature]] | None = None,
) -> EquivalenceReport:
    """Compare the blowup fan under several signature orders with the
    central-alignment fan."""
    top = resolve_contracted(curve, contracted)
    if orders is None:
        orders = standard_extensions(realized_signatures(curve, top))
    orders = [list(o) for o in orders]
    central = central_fan(curve, top)
    vz = [vz_fan(curve, o, top) for o in orders]
    fans = {"central": central}
    fans.update({f"vz{i}": f for i, f in enumerate(vz)})
    return EquivalenceReport(
        contracted=tuple(sorted(top)),
        orders=orders,
        central_cells=len(central),
        vz_cells=[len(f) for f in vz],
        vz_equals_central=[fans_equal(f, central) for f in vz],
        orders_agree=[fans_equal(a, b) for a, b in combinations(vz, 2)],
        hazards=[order_hazards(curve, o, top) for o in orders],
        fans=fans,
    )
