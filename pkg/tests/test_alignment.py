import pytest

from radalign import examples
from radalign.alignment import (
    RadialAlignment,
    alignment_cone,
    central_alignments,
    central_fan,
    minimal_monoid,
    radial_fan,
)
from radalign.cones import deformation_cone, fan_violations, fans_equal, refines, sample_points
from radalign.curve import TropicalCurve
from radalign.errors import PreconditionError
from radalign.linear import Functional

from oracles import sorted_radii_blocks

al, be, ga = (Functional.gen(x) for x in ("alpha", "beta", "gamma"))


def by_label(fan):
    return {lab.blocks: c for lab, c in zip(fan.labels, fan.cells)}


def test_radial_three_edge(three_edge):
    fan = radial_fan(three_edge)
    base = deformation_cone(three_edge)
    cells = by_label(fan)
    assert cells == {
        (("B",), ("A",), ("D",)): base.with_inequalities(be - al),
        (("A",), ("B",), ("D",)): base.with_inequalities(al - be, be + ga - al),
        (("A",), ("D",), ("B",)): base.with_inequalities(al - be - ga),
    }
    for point in [(1, 2, 1), (2, 1, 2), (4, 1, 1)]:
        assert sum(c.in_relative_interior(point) for c in fan.cells) == 1


def test_radial_trivial_cases():
    fan = radial_fan(examples.smooth_curve(2))
    assert len(fan) == 1 and fan.cells[0].dim == 0 and fan.labels[0] == RadialAlignment(())
    assert len(radial_fan(examples.banana_curve(pendants=1))) == 2


def test_minimal_monoid_examples(three_edge):
    cells = by_label(radial_fan(three_edge))
    mid = minimal_monoid(three_edge, cells[(("A",), ("B",), ("D",))])
    assert set(mid.generators) == {be, al - be, be + ga - al} and mid.free
    low = minimal_monoid(three_edge, cells[(("B",), ("A",), ("D",))])
    assert set(low.generators) == {al, be - al, ga} and low.free
    smooth = examples.smooth_curve(1)
    empty = minimal_monoid(smooth, radial_fan(smooth).cells[0])
    assert empty.generators == () and empty.free


def test_minimal_monoid_generates_dual(corpus):
    """Each generator is nonnegative on the cell, and the generators span
    the dual lattice: their matrix is unimodular in the cell's coordinates."""
    from radalign.exact import smith_invariants

    for c in corpus:
        for cell in radial_fan(c).cells:
            mm = minimal_monoid(c, cell)
            assert mm.free == cell.is_free()
            vecs = [cell.vector(g) for g in mm.generators]
            assert all(cell.is_nonnegative(v) for v in vecs)
            if vecs:
                assert smith_invariants(vecs) == [1] * len(c.edges)


def test_central_three_edge_equals_radial(three_edge):
    cf = central_fan(three_edge)
    assert len(cf) == 3
    assert fans_equal(cf, radial_fan(three_edge))


def test_central_three_spoke_coarser(three_spoke):
    cf = central_fan(three_spoke, ["c"])
    a, b, e, a2 = (Functional.gen(x) for x in ("a", "b", "e", "a2"))
    pivot_u = [x for x in central_alignments(three_spoke, ["c"]) if x.pivot == "u"][0]
    assert pivot_u.cone == deformation_cone(three_spoke).with_inequalities(b - a, e - a)
    for other in (b - (a + a2), e - (a + a2), b - e):
        assert pivot_u.cone.sign(other) is None
    rf = radial_fan(three_spoke)
    assert not fans_equal(rf, cf) and refines(rf, cf)
    inside = [r for r in rf.cells if pivot_u.cone.contains_cone(r)]
    assert len(inside) > 1 and pivot_u.cone not in inside


def test_central_trivial():
    aligns = central_alignments(examples.smooth_curve(2))
    assert len(aligns) == 1 and aligns[0].radius.is_zero()


def test_central_rejects_unstable():
    c = TropicalCurve.build([("c", 1), ("u", 0)], [("a", "c", "u")], {"u": [1]})
    with pytest.raises(PreconditionError):
        central_alignments(c)


def test_zero_radius_alignment_only_without_marked_outer_vertices(three_edge):
    aligns = central_alignments(three_edge, [])
    assert len(aligns) == 1 and aligns[0].pivot is None and aligns[0].radius.is_zero()
    assert all(a.pivot is not None for a in central_alignments(three_edge))


def test_labels_match_sampled_radii(corpus):
    for c in corpus:
        fan = radial_fan(c)
        for lab, cell in zip(fan.labels, fan.cells):
            pts = [p for p in sample_points(cell, 20, seed=7) if cell.in_relative_interior(p)]
            pts.append(cell.interior_sample)
            for p in pts:
                assert sorted_radii_blocks(c, dict(zip(cell.ambient, p))) == lab.blocks


def test_label_cone_roundtrip(corpus):
    for c in corpus:
        fan = radial_fan(c)
        for lab, cell in zip(fan.labels, fan.cells):
            assert alignment_cone(c, lab) == cell


def test_fans_are_valid(corpus):
    for c in corpus[::5]:
        assert fan_violations(radial_fan(c), samples=200) == []
        assert fan_violations(central_fan(c), samples=200) == []


def test_central_cells_free(corpus):
    for c in corpus:
        assert all(cell.is_free() for cell in central_fan(c).cells)
