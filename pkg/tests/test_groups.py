import itertools

import pytest
from hypothesis import given, strategies as st

from omegagrp.constructions import direct_product, klein4, symmetric3
from omegagrp.groups import FinGroup, FinGroupoid, GroupError, find_isomorphism, is_homomorphism, isomorphic
from oracles import brute_isomorphic, perm_compose

SMALL = {"Z1": FinGroup.cyclic(1), "Z2": FinGroup.cyclic(2), "Z3": FinGroup.cyclic(3),
         "Z4": FinGroup.cyclic(4), "V4": klein4(), "S3": symmetric3(), "Z6": FinGroup.cyclic(6),
         "Z2xZ2": direct_product(FinGroup.cyclic(2), FinGroup.cyclic(2)),
         "Z2xZ3": direct_product(FinGroup.cyclic(2), FinGroup.cyclic(3))}


@pytest.mark.parametrize("name", SMALL)
def test_small_groups_satisfy_axioms(name):
    assert SMALL[name].violations() == []


def test_s3_table_matches_permutation_composition():
    S3 = symmetric3()
    for p, q in itertools.product(S3.elements, repeat=2):
        assert S3.mul(p, q) == perm_compose(p, q)
    assert S3.unit == "012" and not S3.is_abelian()


@pytest.mark.parametrize("a,b", list(itertools.combinations_with_replacement(sorted(SMALL), 2)))
def test_isomorphism_search_agrees_with_brute_force(a, b):
    G, H = SMALL[a], SMALL[b]
    assert isomorphic(G, H) == brute_isomorphic(G, H)
    phi = find_isomorphism(G, H)
    if phi is not None:
        assert is_homomorphism(phi, G, H) and len(set(phi.values())) == len(G)


def test_named_isomorphisms():
    assert isomorphic(SMALL["V4"], SMALL["Z2xZ2"])
    assert isomorphic(SMALL["Z6"], SMALL["Z2xZ3"])
    assert not isomorphic(SMALL["Z4"], SMALL["V4"])
    assert not isomorphic(SMALL["S3"], SMALL["Z6"])


def test_broken_table_is_reported():
    Z3 = FinGroup.cyclic(3)
    bad = FinGroup(Z3.elements, dict(Z3.table) | {("1", "1"): "1"}, "0")
    assert bad.violations()


def test_quotient_of_s3_by_a3():
    S3 = symmetric3()
    Q, proj = S3.quotient({"012", "120", "201"})
    assert len(Q) == 2 and Q.violations() == []
    assert is_homomorphism(proj, S3, Q)


def test_quotient_rejects_non_normal():
    S3 = symmetric3()
    with pytest.raises(GroupError):
        S3.quotient({"012", "102"})


@given(st.integers(1, 12), st.integers(1, 12))
def test_cyclic_quotients(n, k):
    if n % k:
        return
    G = FinGroup.cyclic(n)
    sub = G.generated([str(k % n)])
    Q, proj = G.quotient(sub)
    assert len(Q) == k and isomorphic(Q, FinGroup.cyclic(k))


@given(st.sampled_from(sorted(SMALL)))
def test_generators_generate(name):
    G = SMALL[name]
    assert G.generated(G.generators()) == set(G.elements)


def _two_object_groupoid():
    objs = ("x", "y")
    mors = {"1x": ("x", "x"), "1y": ("y", "y"), "f": ("x", "y"), "g": ("y", "x")}
    comp = {("1x", "1x"): "1x", ("1y", "1y"): "1y", ("f", "1x"): "f", ("1y", "f"): "f",
            ("g", "1y"): "g", ("1x", "g"): "g", ("g", "f"): "1x", ("f", "g"): "1y"}
    return FinGroupoid(objs, mors, comp, {"x": "1x", "y": "1y"})


def test_groupoid_basics():
    B = _two_object_groupoid()
    assert B.violations() == []
    assert B.inverse("f") == "g"
    assert B.components() == [frozenset({"x", "y"})]
    assert len(B.vertex_group("x")) == 1
