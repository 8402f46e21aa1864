"""Named examples: categories, groupoid morphisms and immersion bundles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .constructions import (
    CrossedModule,
    b2,
    codiscrete,
    conjugation,
    contractible_two_group,
    crossed_module_map,
    delooping,
    discrete,
    disjoint_union,
    double_delooping,
    functor_from_abstract,
    interval,
    klein4,
    parallel_pair,
    parallel_pair_2iso,
    point,
    product,
    product_projection,
    product_section,
    random_two_category,
    random_two_groupoid,
    saturating_monoid,
    symmetric3,
    trivial_action,
    two_group,
)
from .cylinder import Cylinder, ImmersionWitness, cyl_trivial, solve_homotopy
from .groups import FinGroup
from .omega_cat import OmegaCat, OmegaFunctor, boundary_globe, functor_from_function, globe, identity_functor

Z = FinGroup.cyclic


def to_point(c: OmegaCat) -> OmegaFunctor:
    P = point(c.N)
    return functor_from_function(c, P, lambda k, u: P.cells_at(k)[0])


def from_point(c: OmegaCat, x: str) -> OmegaFunctor:
    return functor_from_function(point(c.N), c, lambda k, u: c.lift(x, 0, k))


def deloop_2(G: FinGroup) -> OmegaCat:
    """``BG`` built as a strict 2-group, so crossed-module maps apply to it."""
    T = FinGroup.trivial("e")
    return two_group(CrossedModule(G, T, {"e": G.unit}, trivial_action))


def group_map(dom: OmegaCat, cod: OmegaCat, phi: dict) -> OmegaFunctor:
    """``B(phi)`` between deloopings built by ``delooping``."""
    def fn(k, c):
        if c[0] == "o":
            return c
        if c[0] == "m":
            return ("m", phi[c[1]])
        return ("i", fn(k - 1, c[1]))
    return functor_from_abstract(dom, cod, fn)


def fold(c: OmegaCat, a: OmegaCat) -> OmegaFunctor:
    """``a + a -> a``."""
    return functor_from_function(c, a, lambda k, u: c.abstract[k][u][1])


def inclusion_left(a: OmegaCat, s: OmegaCat) -> OmegaFunctor:
    return functor_from_function(a, s, lambda k, u: s.names[k][(0, u)])


@lru_cache(maxsize=None)
def categories() -> dict[str, OmegaCat]:
    cats = {
        "point0": point(0), "point1": point(1), "point2": point(2),
        "discrete_xy0": discrete(["x", "y"], 0), "discrete_xy1": discrete(["x", "y"], 1),
        "discrete_xy2": discrete(["x", "y"], 2),
        "I1": interval(1), "I1_2": interval(2),
        "codiscrete_abc1": codiscrete(["a", "b", "c"], 1), "codiscrete_abc2": codiscrete(["a", "b", "c"], 2),
        "BZ2": delooping(Z(2), 1), "BZ2_2": delooping(Z(2), 2),
        "BZ3_2": delooping(Z(3), 2), "BZ4": delooping(Z(4), 1), "BZ4_2": delooping(Z(4), 2),
        "BS3": delooping(symmetric3(), 1), "BV4": delooping(klein4(), 1),
        "B2Z2": b2(Z(2)), "B2Z3": b2(Z(3)), "B2Z4": b2(Z(4)),
        "EZ2": contractible_two_group(Z(2)), "EZ3": contractible_two_group(Z(3)),
        "ES3": contractible_two_group(symmetric3()),
        "Z4_over_Z2": two_group(CrossedModule(Z(4), Z(2), {"0": "0", "1": "2"}, trivial_action)),
        "Z2_acting_Z3": two_group(CrossedModule(Z(2), Z(3), {h: "0" for h in "012"},
                                                lambda g, h: h if g == "0" else str(-int(h) % 3))),
        "A3_in_S3": _a3_in_s3(),
        "BZ2_as_2group": deloop_2(Z(2)), "BZ4_as_2group": deloop_2(Z(4)),
        "parallel_pair": parallel_pair(1), "parallel_pair_2iso": parallel_pair_2iso(),
        "BM_saturating": delooping(saturating_monoid(2), 2),
        "B2M_saturating": double_delooping(saturating_monoid(2)),
    }
    cats["I1_x_B2Z3"] = product(cats["I1_2"], cats["B2Z3"])
    cats["EZ2_x_BZ2"] = product(cats["EZ2"], cats["BZ2_as_2group"])
    cats["BZ2_sum_BZ2"] = disjoint_union(cats["BZ2_2"], cats["BZ2_2"])
    cats["I1_sum_point"] = disjoint_union(cats["I1_2"], cats["point2"])
    cats["point_sum_point"] = disjoint_union(cats["point2"], cats["point2"])
    cats["I1_x_I1"] = product(cats["I1"], cats["I1"])
    for n in range(4):
        cats[f"globe{n}"] = globe(n, n)
        if n:
            cats[f"boundary_globe{n}"] = boundary_globe(n, n - 1)
    return cats


def _a3_in_s3() -> OmegaCat:
    S3 = symmetric3()
    A3 = S3.subgroup({"012", "120", "201"})
    return two_group(CrossedModule(S3, A3, {h: h for h in A3.elements}, conjugation(S3)))


NON_GROUPOIDS = ("parallel_pair", "parallel_pair_2iso", "BM_saturating", "B2M_saturating",
                 "globe1", "globe2", "globe3", "boundary_globe2", "boundary_globe3")


def groupoid_names() -> list[str]:
    """Corpus categories that are groupoids."""
    return [k for k in categories() if k not in NON_GROUPOIDS]


def random_groupoids(count: int = 20, seed: int = 0) -> list[OmegaCat]:
    return [random_two_groupoid(seed + s) for s in range(count)]


def random_categories(count: int = 20, seed: int = 0) -> list[OmegaCat]:
    return [random_two_category(seed + s) for s in range(count)]


@lru_cache(maxsize=None)
def morphisms() -> dict[str, OmegaFunctor]:
    """Functors between corpus groupoids, with known true and false cases."""
    c = categories()
    sign = {p: ("0" if p in ("012", "120", "201") else "1") for p in symmetric3().elements}
    m: dict[str, OmegaFunctor] = {
        "id_I1_2": identity_functor(c["I1_2"]),
        "id_BZ2": identity_functor(c["BZ2"]),
        "id_B2Z3": identity_functor(c["B2Z3"]),
        "id_EZ2": identity_functor(c["EZ2"]),
        "I1_to_point": to_point(c["I1"]),
        "I1_2_to_point": to_point(c["I1_2"]),
        "BZ2_to_point": to_point(c["BZ2"]),
        "BZ2_2_to_point": to_point(c["BZ2_2"]),
        "discrete_to_point": to_point(c["discrete_xy1"]),
        "discrete0_to_point": to_point(c["discrete_xy0"]),
        "point_to_I1_2": from_point(c["I1_2"], "x"),
        "point_to_discrete": from_point(c["discrete_xy1"], "x"),
        "B2Z3_to_point": to_point(c["B2Z3"]),
        "point_to_B2Z3": from_point(c["B2Z3"], "*"),
        "point_to_B2Z2": from_point(c["B2Z2"], "*"),
        "BZ4_to_BZ2": group_map(c["BZ4_2"], c["BZ2_2"], {str(k): str(k % 2) for k in range(4)}),
        "BZ2_to_BZ4": group_map(c["BZ2_2"], c["BZ4_2"], {"0": "0", "1": "2"}),
        "BZ4_double": group_map(c["BZ4"], c["BZ4"], {str(k): str(2 * k % 4) for k in range(4)}),
        "BZ3_negate": group_map(c["BZ3_2"], c["BZ3_2"], {str(k): str(-k % 3) for k in range(3)}),
        "BS3_sign": group_map(c["BS3"], c["BZ2"], sign),
        "BV4_project": group_map(c["BV4"], c["BZ2"], {e: e[0] for e in klein4().elements}),
        "B2Z4_to_B2Z2": crossed_module_map(c["B2Z4"], c["B2Z2"], {"e": "e"}, {str(k): str(k % 2) for k in range(4)}),
        "B2Z3_negate": crossed_module_map(c["B2Z3"], c["B2Z3"], {"e": "e"}, {str(k): str(-k % 3) for k in range(3)}),
        "EZ2_to_point": to_point(c["EZ2"]),
        "EZ3_to_point": to_point(c["EZ3"]),
        "ES3_to_point": to_point(c["ES3"]),
        "point_to_EZ2": from_point(c["EZ2"], "*"),
        "Z4_over_Z2_to_BZ2": crossed_module_map(c["Z4_over_Z2"], c["BZ2_as_2group"],
                                                {str(k): str(k % 2) for k in range(4)}, {"0": "e", "1": "e"}),
        "Z4_over_Z2_from_BZ4": crossed_module_map(c["BZ4_as_2group"], c["Z4_over_Z2"],
                                                  {str(k): str(k) for k in range(4)}, {"e": "0"}),
        "Z2_acting_Z3_to_BZ2": crossed_module_map(c["Z2_acting_Z3"], c["BZ2_as_2group"],
                                                  {"0": "0", "1": "1"}, {h: "e" for h in "012"}),
        "A3_in_S3_to_BZ2": crossed_module_map(c["A3_in_S3"], c["BZ2_as_2group"], sign,
                                              {h: "e" for h in ("012", "120", "201")}),
        "I1_x_B2Z3_project": product_projection(c["I1_2"], c["B2Z3"], c["I1_x_B2Z3"], 1),
        "B2Z3_into_I1_x_B2Z3": product_section(c["I1_2"], c["B2Z3"], c["I1_x_B2Z3"], 1, "x"),
        "EZ2_x_BZ2_project": product_projection(c["EZ2"], c["BZ2_as_2group"], c["EZ2_x_BZ2"], 1),
        "I1_x_I1_project": product_projection(c["I1"], c["I1"], c["I1_x_I1"], 0),
        "I1_sum_point_collapse": functor_from_function(
            c["I1_sum_point"], c["point_sum_point"],
            lambda k, u: c["point_sum_point"].names[k][(c["I1_sum_point"].abstract[k][u][0],
                                                         c["point2"].cells_at(k)[0])]),
        "BZ2_fold": fold(c["BZ2_sum_BZ2"], c["BZ2_2"]),
        "BZ2_include_left": inclusion_left(c["BZ2_2"], c["BZ2_sum_BZ2"]),
        "codiscrete_to_point": to_point(c["codiscrete_abc2"]),
        "point_to_codiscrete": from_point(c["codiscrete_abc2"], "a"),
        "discrete_into_I1": functor_from_function(c["discrete_xy1"], c["I1"], lambda k, u: u),
    }
    return m


def category_morphisms() -> dict[str, OmegaFunctor]:
    """Functors between non-groupoid categories, for the folk class only."""
    c = categories()
    pp = c["parallel_pair"]
    swap = functor_from_function(pp, pp, lambda k, u: {"f": "g", "g": "f"}.get(u, u))
    collapse = to_point(pp)
    pp2 = c["parallel_pair_2iso"]
    identify = functor_from_function(pp2, pp2, lambda k, u: {"g": "f", "id:g": "id:f", "alpha": "id:f",
                                                             "beta": "id:f"}.get(u, u))
    return {"parallel_pair_swap": swap, "parallel_pair_to_point": collapse,
            "parallel_pair_2iso_identify": identify}


@dataclass
class Bundle:
    witness: ImmersionWitness
    expect: bool


def _retract_bundle(D: OmegaCat, x: str) -> ImmersionWitness:
    f = from_point(D, x)
    P = f.dom
    g = functor_from_function(D, P, lambda k, u: P.cells_at(k)[0])
    h0 = {}
    for y in D.cells_at(0):
        h0[y] = cyl_trivial(D, y, 0) if y == x else Cylinder(0, 0, x, y, principal=D.homset(1, x, y)[0])
    h = solve_homotopy(f, g, h0)
    if h is None:
        raise ValueError("no homotopy found")
    return ImmersionWitness(f, g, h)


@lru_cache(maxsize=None)
def immersions() -> dict[str, Bundle]:
    c = categories()
    I = c["I1"]
    ident_h = {k: {u: cyl_trivial(I, u, k) for u in I.cells_at(k)} for k in range(I.N + 1)}
    D = c["discrete_xy1"]
    f = from_point(D, "x")
    P = f.dom
    g = functor_from_function(D, P, lambda k, u: P.cells_at(k)[0])
    bad_h = {k: {u: cyl_trivial(D, u, k) for u in D.cells_at(k)} for k in range(D.N + 1)}
    return {
        "identity_I1": Bundle(ImmersionWitness(identity_functor(I), identity_functor(I), ident_h), True),
        "point_into_I1": Bundle(_retract_bundle(I, "x"), True),
        "point_into_I1_2": Bundle(_retract_bundle(c["I1_2"], "x"), True),
        "point_into_codiscrete_abc": Bundle(_retract_bundle(c["codiscrete_abc2"], "a"), True),
        "point_into_EZ2": Bundle(_retract_bundle(c["EZ2"], "*"), True),
        "point_into_discrete": Bundle(ImmersionWitness(f, g, bad_h), False),
    }
