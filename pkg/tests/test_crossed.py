import itertools

import pytest
from hypothesis import given, strategies as st

from omegagrp.constructions import symmetric3
from omegagrp.corpus import categories, groupoid_names, morphisms, random_groupoids
from omegagrp.crossed import (
    CrossedComplex,
    CrossedMorphism,
    based_cells,
    cc_pi0,
    cc_pi1,
    cc_pin,
    functor_A,
    functor_A_morphism,
    grp_tfib_direct,
    is_cc_trivial_fibration,
    is_cc_weak_equivalence,
    is_grp_tfib_cc,
    validate_cc_morphism,
    validate_crossed,
)
from omegagrp.groups import FinGroup, FinGroupoid, GroupError, isomorphic
from omegagrp.omega_cat import compose_functors, identity_functor
from omegagrp.omega_grp import as_groupoid, is_weak_equivalence, pi0, pi_n
from oracles import brute_isomorphic

CATS = categories()
GRPS = groupoid_names()
MORPHS = morphisms()


def one_object(G: FinGroup) -> FinGroupoid:
    """A group viewed as a groupoid on the object '*'."""
    return FinGroupoid(("*",), {g: ("*", "*") for g in G.elements},
                       {(a, b): G.mul(a, b) for a in G.elements for b in G.elements}, {"*": G.unit})


def z4_over_z2() -> CrossedComplex:
    Z4, Z2 = FinGroup.cyclic(4), FinGroup.cyclic(2)
    return CrossedComplex(2, one_object(Z4), {2: {"*": Z2}}, {2: {"*": {"0": "0", "1": "2"}}},
                          {2: {g: {"0": "0", "1": "1"} for g in Z4.elements}})


def test_hand_built_complex_homotopy():
    c = z4_over_z2()
    assert validate_crossed(c) == []
    assert isomorphic(cc_pi1(c, "*"), FinGroup.cyclic(2))
    assert len(cc_pin(c, "*", 2)) == 1
    assert len(cc_pin(c, "*", 3)) == 1


def test_boundary_not_a_homomorphism():
    c = z4_over_z2()
    c.d[2]["*"]["1"] = "1"
    assert [v.rule for v in validate_crossed(c)] == ["boundary-hom"]


def test_nonabelian_c2_over_trivial_base_violates_crossed_module_rule():
    S3 = symmetric3()
    triv = FinGroup.trivial("e")
    c = CrossedComplex(2, one_object(triv), {2: {"*": S3}}, {2: {"*": {a: "e" for a in S3.elements}}},
                       {2: {"e": {a: a for a in S3.elements}}})
    rules = {v.rule for v in validate_crossed(c)}
    assert rules == {"crossed-module"}


def test_nonabelian_upper_group_rejected():
    S3 = symmetric3()
    triv = FinGroup.trivial("e")
    one = FinGroup.trivial("1")
    c = CrossedComplex(3, one_object(triv), {2: {"*": one}, 3: {"*": S3}},
                       {2: {"*": {"1": "e"}}, 3: {"*": {a: "1" for a in S3.elements}}},
                       {2: {"e": {"1": "1"}}, 3: {"e": {a: a for a in S3.elements}}})
    assert "abelian" in {v.rule for v in validate_crossed(c)}


def test_non_central_kernel_is_refused():
    c = CrossedComplex(2, one_object(FinGroup.trivial("e")), {2: {"*": symmetric3()}},
                       {2: {"*": {a: "e" for a in symmetric3().elements}}},
                       {2: {"e": {a: a for a in symmetric3().elements}}})
    with pytest.raises(GroupError):
        cc_pin(c, "*", 2)


@pytest.mark.parametrize("name", GRPS)
def test_functor_A_is_valid(name):
    assert validate_crossed(functor_A(as_groupoid(CATS[name]))) == []


@pytest.mark.parametrize("name", GRPS)
def test_homotopy_bridge(name):
    g = as_groupoid(CATS[name])
    A = functor_A(g)
    assert set(cc_pi0(A)) == set(pi0(g))
    for x in g.cells_at(0):
        for n in range(1, g.N + 1):
            P, Q = pi_n(g, x, n), cc_pin(A, x, n)
            assert brute_isomorphic(P, Q) if len(P) <= 6 else isomorphic(P, Q)


@given(st.integers(0, 300))
def test_homotopy_bridge_random(seed):
    g = as_groupoid(random_groupoids(1, seed)[0])
    A = functor_A(g)
    for x in g.cells_at(0):
        for n in range(1, g.N + 1):
            assert isomorphic(pi_n(g, x, n), cc_pin(A, x, n))


def test_based_cells_of_b2z3():
    g = CATS["B2Z3"]
    assert based_cells(g, "*", 1) == ["id:*"]
    assert sorted(based_cells(g, "*", 2)) == ["1", "2", "id:id:*"]


@pytest.mark.parametrize("name", sorted(MORPHS))
def test_A_of_morphism_is_valid_and_weq_matches(name):
    f = MORPHS[name]
    Af = functor_A_morphism(f)
    assert validate_cc_morphism(Af) == []
    assert is_cc_weak_equivalence(Af).holds == is_weak_equivalence(f).holds


def _composable_pairs():
    out = []
    for (a, f), (b, g) in itertools.product(MORPHS.items(), repeat=2):
        if f.cod is g.dom:
            out.append((a, b))
    return out


@pytest.mark.parametrize("a,b", _composable_pairs())
def test_A_is_functorial(a, b):
    f, g = MORPHS[a], MORPHS[b]
    gf = functor_A_morphism(compose_functors(g, f))
    Af, Ag = functor_A_morphism(f), functor_A_morphism(g)
    for x in f.dom.cells_at(0):
        assert gf.objects[x] == Ag.objects[Af.objects[x]]
    for n in range(2, f.dom.N + 1):
        for x in f.dom.cells_at(0):
            for c, img in gf.maps[n][x].items():
                assert img == Ag.apply(n, Af.objects[x], Af.apply(n, x, c))


def test_composable_pairs_exist():
    assert len(_composable_pairs()) >= 5


@pytest.mark.parametrize("name", ["I1", "B2Z3", "EZ2"])
def test_A_preserves_identities(name):
    g = CATS[name]
    Ai = functor_A_morphism(identity_functor(g))
    for n, per in Ai.maps.items():
        for x, m in per.items():
            assert all(k == v for k, v in m.items())


@pytest.mark.parametrize("name,expected", [("id_BZ2", True), ("I1_to_point", True), ("discrete_to_point", False),
                                           ("EZ2_to_point", True), ("BZ2_to_point", False)])
def test_cc_trivial_fibration_examples(name, expected):
    v = is_cc_trivial_fibration(functor_A_morphism(MORPHS[name]))
    assert v.holds is expected
    if name == "discrete_to_point":
        assert v.witness["condition"] == "morphisms"


@pytest.mark.parametrize("name", sorted(MORPHS))
def test_tfib_routes_agree(name):
    f = MORPHS[name]
    assert grp_tfib_direct(f).holds == is_cc_trivial_fibration(functor_A_morphism(f)).holds
    is_grp_tfib_cc(f)


def test_cc_morphism_validation_catches_bad_map():
    f = functor_A_morphism(MORPHS["B2Z3_negate"])
    bad = CrossedMorphism(f.dom, f.cod, f.objects, f.morphisms,
                          {2: {"*": {a: ("1" if a != "id:id:*" else a) for a in f.maps[2]["*"]}}})
    assert validate_cc_morphism(bad)[0].rule == "group-hom"
