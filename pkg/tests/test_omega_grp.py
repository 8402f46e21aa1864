import zlib

import pytest
from hypothesis import given, strategies as st

from omegagrp.constructions import CrossedModule, conjugation, symmetric3, trivial_action, two_group
from omegagrp.corpus import categories, groupoid_names, morphisms, random_categories, random_groupoids
from omegagrp.groups import FinGroup
from omegagrp.omega_cat import validate_category
from omegagrp.omega_grp import (
    NotAGroupoid,
    as_groupoid,
    check_invertibility_equivalence,
    homotopy_relation,
    inverse,
    is_infinity_n_category,
    is_weak_equivalence,
    pi0,
    pi_n,
    validate_groupoid,
    varpi,
)
from mutations import mutations
from oracles import brute_isomorphic, components, crossed_module_homotopy

CATS = categories()
GRPS = groupoid_names()
Z = FinGroup.cyclic


@pytest.mark.parametrize("name", GRPS)
def test_corpus_groupoids_pass(name):
    assert validate_groupoid(CATS[name])[0] == []


@pytest.mark.parametrize("name", ["parallel_pair", "parallel_pair_2iso", "BM_saturating", "globe1"])
def test_non_groupoids_rejected(name):
    report, _ = validate_groupoid(CATS[name])
    assert report and report[0].rule == "inverse"
    with pytest.raises(NotAGroupoid):
        as_groupoid(CATS[name])


@pytest.mark.parametrize("name", [n for n in GRPS if CATS[n].N >= 1])
def test_groupoid_mutations_rejected_with_rule(name):
    for desc, m in mutations(CATS[name], 3, seed=zlib.crc32(name.encode())):
        report, _ = validate_groupoid(m)
        assert report, desc
        assert report[0].rule in {"totality", "source-of-composite", "target-of-composite", "associativity",
                                  "units", "identity", "globular", "boundary", "unit-functoriality",
                                  "exchange", "inverse"}


@pytest.mark.parametrize("c", random_categories(24, seed=7), ids=lambda c: repr(c))
def test_invertibility_forms_agree(c):
    r = check_invertibility_equivalence(c)
    assert r["agree"]
    if r["all"]:
        assert r["reconstructed"] and r["mismatches"] == []


def test_pp2_is_an_infinity_one_category():
    c = CATS["parallel_pair_2iso"]
    assert is_infinity_n_category(c, 1)
    assert not is_infinity_n_category(c, 0)
    assert is_infinity_n_category(CATS["B2Z3"], 0)


def test_inverses_in_bz4():
    c = CATS["BZ4"]
    assert inverse(as_groupoid(c), 1, 0, "1") == "3"
    assert inverse(c, 2, 0, "id:1") == "id:3"


# crossed-module data behind the 2-group corpus entries, used with the oracle
S3 = symmetric3()
A3 = S3.subgroup({"012", "120", "201"})
MODULES = {
    "EZ2": CrossedModule(Z(2), Z(2), {"0": "0", "1": "1"}, conjugation(Z(2))),
    "Z4_over_Z2": CrossedModule(Z(4), Z(2), {"0": "0", "1": "2"}, trivial_action),
    "Z2_acting_Z3": CrossedModule(Z(2), Z(3), {h: "0" for h in "012"},
                                  lambda g, h: h if g == "0" else str(-int(h) % 3)),
    "A3_in_S3": CrossedModule(S3, A3, {h: h for h in A3.elements}, conjugation(S3)),
}


@pytest.mark.parametrize("name", sorted(MODULES))
def test_pi_of_two_groups_matches_oracle(name):
    cm = MODULES[name]
    coker, ker, coker_ab, _ = crossed_module_homotopy(cm)
    g = as_groupoid(two_group(cm))
    p1, p2 = pi_n(g, g.cells_at(0)[0], 1), pi_n(g, g.cells_at(0)[0], 2)
    assert (len(p1), len(p2)) == (coker, ker)
    assert p1.is_abelian() == coker_ab


KNOWN = {  # name -> orders of pi_1, pi_2 at the first object
    "BZ2": (2, 1), "BZ4_2": (4, 1), "BS3": (6, 1), "BV4": (4, 1), "B2Z3": (1, 3), "B2Z4": (1, 4),
    "EZ3": (1, 1), "ES3": (1, 1), "I1": (1, 1), "codiscrete_abc2": (1, 1), "I1_x_B2Z3": (1, 3),
    "EZ2_x_BZ2": (2, 1), "Z2_acting_Z3": (2, 3),
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_homotopy_orders(name):
    g = as_groupoid(CATS[name])
    x = g.cells_at(0)[0]
    got = tuple(len(pi_n(g, x, n)) if n <= g.N else 1 for n in (1, 2))
    assert got == KNOWN[name]


def test_bs3_pi1_is_s3():
    g = as_groupoid(CATS["BS3"])
    assert brute_isomorphic(pi_n(g, "*", 1), symmetric3())


@pytest.mark.parametrize("name", GRPS)
def test_pi0_matches_naive_components(name):
    g = as_groupoid(CATS[name])
    arrows = [(g.s(1, u), g.t(1, u)) for u in g.cells_at(1)] if g.N >= 1 else []
    assert set(pi0(g)) == components(g.cells_at(0), arrows)


@pytest.mark.parametrize("name", [n for n in GRPS if CATS[n].N >= 2])
def test_pi2_abelian(name):
    g = as_groupoid(CATS[name])
    for x in g.cells_at(0):
        assert pi_n(g, x, 2).is_abelian()


@given(st.integers(0, 300))
def test_pi2_abelian_random(seed):
    g = as_groupoid(random_groupoids(1, seed)[0])
    for x in g.cells_at(0):
        assert pi_n(g, x, 2).is_abelian()


@given(st.integers(0, 300))
def test_homotopy_is_an_equivalence_and_varpi_a_groupoid(seed):
    g = as_groupoid(random_groupoids(1, seed)[0])
    for n in range(1, g.N + 1):
        cls = homotopy_relation(g, n)
        assert set(cls) == set(g.cells_at(n))
        assert varpi(g, n).violations() == []


MORPHS = morphisms()


@pytest.mark.parametrize("name", sorted(MORPHS))
def test_weak_equivalence_methods_agree(name):
    f = MORPHS[name]
    verdicts = {m: is_weak_equivalence(f, m).holds for m in (1, 2, 3, 4)}
    assert len(set(verdicts.values())) == 1, verdicts


@pytest.mark.parametrize("name,expected", [("I1_to_point", True), ("BZ2_to_point", False),
                                           ("BZ3_negate", True), ("BZ4_double", False),
                                           ("point_to_discrete", False), ("EZ2_to_point", True)])
def test_weak_equivalence_examples(name, expected):
    assert is_weak_equivalence(MORPHS[name]).holds is expected


def test_method_rejects_unknown():
    with pytest.raises(ValueError):
        is_weak_equivalence(MORPHS["I1_to_point"], 5)


def test_random_groupoids_are_valid_categories():
    for g in random_groupoids(20):
        assert validate_category(g) == []
