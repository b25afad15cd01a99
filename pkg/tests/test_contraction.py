import pytest

from radalign import examples
from radalign.alignment import radial_fan
from radalign.cones import deformation_cone
from radalign.contraction import (
    SingularPoint,
    SmythGraph,
    circle_data,
    contract_circle,
    contraction_radius,
    delta_m,
    is_m_stable,
    radius_chain,
    valence_semicontinuity_check,
)
from radalign.curve import StabilityClass, TropicalCurve, circuit, stability_class
from radalign.errors import PreconditionError
from radalign.linear import Functional
from radalign.pl import radii

al, be, ga = (Functional.gen(x) for x in ("alpha", "beta", "gamma"))
ZERO = Functional.zero()


@pytest.fixture
def low_alpha(three_edge):
    return deformation_cone(three_edge).with_inequalities(be - al)


@pytest.fixture
def high_alpha(three_edge):
    return deformation_cone(three_edge).with_inequalities(al - be - ga)


def test_four_spoke_circle(four_spoke):
    cd = circle_data(four_spoke, examples.four_spoke_cell(), Functional.gen("l1"))
    assert (cd.eta, cd.tau) == (5, 7)
    assert cd.incident_edges == {"l1", "l3", "l4"} and cd.incident_legs == {3, 4}
    assert cd.boundary == {"v1", "v4"} and cd.interior == {"c", "v2"}


def test_zero_circle(corpus):
    for c in corpus:
        cd = circle_data(c, deformation_cone(c), ZERO)
        circ = circuit(c)
        leaving = sum(1 for e in c.edges if (e.ends[0] in circ.vertices) != (e.ends[1] in circ.vertices))
        assert cd.eta == 0
        assert cd.tau == leaving + sum(1 for l in c.legs if l.at in circ.vertices)


def test_three_edge_circle(three_edge, low_alpha):
    cd = circle_data(three_edge, low_alpha, al)
    assert cd.incident_edges == {"alpha", "beta"} and not cd.incident_legs
    assert cd.excident_edges == {"beta"} and cd.excident_legs == {1, 2}
    assert (cd.eta, cd.tau) == (2, 3)


def test_delta_m_four_spoke(four_spoke):
    cell = examples.four_spoke_cell()
    chain = radius_chain(four_spoke, cell)
    l1, l2 = Functional.gen("l1"), Functional.gen("l2")
    assert chain[:3] == [ZERO, l2, l1]
    assert [(circle_data(four_spoke, cell, r).eta, circle_data(four_spoke, cell, r).tau) for r in chain[:3]] == [
        (0, 4),
        (4, 5),
        (5, 7),
    ]
    assert delta_m(four_spoke, cell, 5) == l1


def test_delta_m_three_edge(three_edge, low_alpha):
    assert delta_m(three_edge, low_alpha, 1) == ZERO
    assert delta_m(three_edge, low_alpha, 2) == al


def test_delta_m_errors(three_edge, low_alpha):
    with pytest.raises(PreconditionError):
        delta_m(three_edge, low_alpha, 5)
    with pytest.raises(PreconditionError):
        delta_m(three_edge, low_alpha, -1)
    bare = TropicalCurve.build([("c", 1), ("u", 0)], [("a", "c", "u")], {"c": [1]})
    with pytest.raises(PreconditionError):
        delta_m(bare, deformation_cone(bare), 0)


def test_contract_at_zero(three_edge, low_alpha):
    out = contract_circle(three_edge, low_alpha, ZERO)
    assert out.graph == three_edge and out.singular is None


def test_contract_three_edge(three_edge, low_alpha):
    out = contract_circle(three_edge, low_alpha, al)
    assert out.singular.m == 2 and out.singular.delta_invariant == 2 and out.singular.genus == 1
    assert set(out.singular.branches) == {"B", "X:beta"}
    g = out.graph
    assert sorted(g.legs_at("B")) == [1, 2] and g.legs_at("A") == (5,) and sorted(g.legs_at("D")) == [3, 4]
    assert {frozenset(e.ends) for e in g.edges} == {frozenset({"X:beta", "A"}), frozenset({"A", "D"})}
    assert out.total_genus() == 1 and out.markings == {1, 2, 3, 4, 5}


def test_contract_four_spoke(four_spoke):
    out = contract_circle(four_spoke, examples.four_spoke_cell(), Functional.gen("l1"))
    assert out.singular.m == 5
    assert set(out.singular.branches) == {"v1", "v4", "X:leg3", "X:leg4", "X:l3"}
    assert out.total_genus() == 1


def test_contract_rejects_other_radius(three_edge, low_alpha):
    with pytest.raises(PreconditionError):
        contract_circle(three_edge, low_alpha, al + be)


def test_m_stability_examples(three_edge, low_alpha):
    out = contract_circle(three_edge, low_alpha, al)
    assert is_m_stable(out, 2)
    assert not is_m_stable(out, 3)
    assert is_m_stable(SmythGraph(examples.smooth_curve(1)), 0)


def test_singular_point_genus_formula():
    p = SingularPoint(("a", "b", "c"))
    assert p.delta_invariant - p.m + 1 == 1


def test_contraction_radius_examples(three_edge, low_alpha, high_alpha):
    base = deformation_cone(three_edge)
    assert contraction_radius(three_edge, base, {"c": 1}) == ZERO
    assert contraction_radius(three_edge, low_alpha, {"c": 0, "B": 0, "A": 1, "D": 1}) == be
    assert contraction_radius(three_edge, high_alpha, {"c": 0, "B": 0, "A": 1, "D": 1}) == be
    with pytest.raises(PreconditionError):
        contraction_radius(three_edge, low_alpha, {"A": 0})
    with pytest.raises(PreconditionError):
        contraction_radius(three_edge, low_alpha, {"Q": 1})


def test_semicontinuity_examples(three_edge, low_alpha):
    same = valence_semicontinuity_check(three_edge, low_alpha, al, [])
    assert same.specialization == same.generization and same.ok
    gam = valence_semicontinuity_check(three_edge, low_alpha, al, ["gamma"])
    assert gam.specialization == gam.generization == (2, 3)
    with pytest.raises(PreconditionError):
        valence_semicontinuity_check(three_edge, low_alpha, al, ["alpha"])


def test_semicontinuity_three_edge_exhaustive(three_edge):
    checked = 0
    for cell in radial_fan(three_edge).cells:
        for delta in radius_chain(three_edge, cell):
            for e in three_edge.edges:
                try:
                    rep = valence_semicontinuity_check(three_edge, cell, delta, [e.id])
                except PreconditionError:
                    continue
                assert rep.ok
                checked += 1
    assert checked > 0


def test_valences_monotone_along_chain(corpus):
    for c in corpus:
        semistable = stability_class(c).at_least(StabilityClass.SEMISTABLE)
        for cell in radial_fan(c).cells:
            prev = (-1, -1)
            for r in radius_chain(c, cell):
                cd = circle_data(c, cell, r)
                assert cd.eta >= prev[0] and cd.tau >= prev[1]
                if semistable:
                    assert cd.eta <= cd.tau
                prev = (cd.eta, cd.tau)


def test_contraction_radius_is_first_positive(corpus):
    for c in corpus[::3]:
        lam = radii(c)
        for cell in radial_fan(c).cells:
            chain = radius_chain(c, cell)
            for v in c.vertex_ids:
                r = contraction_radius(c, cell, {v: 1})
                assert cell.compare(r, lam[v]) == 0
                assert any(cell.compare(r, x) == 0 for x in chain)
