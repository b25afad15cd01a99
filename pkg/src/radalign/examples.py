"""Small named curves used by the tests, the CLI docs and the fixtures."""

from __future__ import annotations

from .cones import Cone, deformation_cone
from .curve import TropicalCurve
from .linear import Functional

__all__ = [
    "smooth_curve",
    "three_edge_curve",
    "four_spoke_curve",
    "four_spoke_cell",
    "three_spoke_curve",
    "banana_curve",
]


def smooth_curve(n: int) -> TropicalCurve:
    """One genus-one vertex carrying legs 1..n."""
    return TropicalCurve.build([("v", 1)], [], {"v": list(range(1, n + 1))})


def three_edge_curve() -> TropicalCurve:
    """Genus-one vertex c with a leaf B (legs 1, 2) and a chain A-D
    (leg 5 on A, legs 3, 4 on D); edge lengths alpha, beta, gamma."""
    return TropicalCurve.build(
        [("c", 1), ("B", 0), ("A", 0), ("D", 0)],
        [("alpha", "c", "B"), ("beta", "c", "A"), ("gamma", "A", "D")],
        {"B": [1, 2], "A": [5], "D": [3, 4]},
    )


def four_spoke_curve() -> TropicalCurve:
    """Genus-one vertex c joined to v1..v4 by l1..l4; vi carries legs 2i-1, 2i."""
    verts = [("c", 1)] + [(f"v{i}", 0) for i in range(1, 5)]
    edges = [(f"l{i}", "c", f"v{i}") for i in range(1, 5)]
    legs = {f"v{i}": [2 * i - 1, 2 * i] for i in range(1, 5)}
    return TropicalCurve.build(verts, edges, legs)


def four_spoke_cell() -> Cone:
    """The face l2 <= l1 = l4 <= l3 of the four-spoke deformation cone."""
    l1, l2, l3, l4 = (Functional.gen(f"l{i}") for i in range(1, 5))
    return deformation_cone(four_spoke_curve()).with_inequalities(l1 - l2, l3 - l1).with_equalities(l1 - l4)


def three_spoke_curve() -> TropicalCurve:
    """Genus-one vertex c with spokes to u, w, x; u continues to u2.
    Legs: 1 on u, 2 and 3 on u2, 4 and 5 on w, 6 and 7 on x."""
    return TropicalCurve.build(
        [("c", 1), ("u", 0), ("u2", 0), ("w", 0), ("x", 0)],
        [("a", "c", "u"), ("a2", "u", "u2"), ("b", "c", "w"), ("e", "c", "x")],
        {"u": [1], "u2": [2, 3], "w": [4, 5], "x": [6, 7]},
    )


def banana_curve(legs_each: int = 1, pendants: int = 0) -> TropicalCurve:
    """Two genus-zero vertices joined by edges p, q. With ``pendants`` > 0,
    vertices u (edge a from p0) and w (edge b from p1) hang off the cycle,
    each carrying two legs; otherwise each cycle vertex carries
    ``legs_each`` legs."""
    verts = [("p0", 0), ("p1", 0)]
    edges = [("p", "p0", "p1"), ("q", "p0", "p1")]
    if pendants:
        verts += [("u", 0), ("w", 0)]
        edges += [("a", "p0", "u"), ("b", "p1", "w")]
        return TropicalCurve.build(verts, edges, {"u": [1, 2], "w": [3, 4]})
    return TropicalCurve.build(
        verts, edges, {"p0": list(range(1, legs_each + 1)), "p1": list(range(legs_each + 1, 2 * legs_each + 1))}
    )
