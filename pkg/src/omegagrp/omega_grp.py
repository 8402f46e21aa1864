"""Strict omega-groupoids: inverses, homotopy groupoids and homotopy groups."""

from __future__ import annotations

import itertools

from .globular import Verdict, Violation
from .groups import FinGroup, FinGroupoid
from .omega_cat import (
    ID,
    OmegaCat,
    OmegaFunctor,
    find_inverse,
    horizontal_inverse_from_vertical,
    ident,
    validate_category,
    validate_functor,
    vertical_inverse_from_horizontal,
)


class NotAGroupoid(ValueError):
    pass


def validate_groupoid(c: OmegaCat) -> tuple[list[Violation], dict]:
    """Find every ``*_j``-inverse; report the cells that have none.

    Returns the report and the inverse tables ``inv[(i, j)][u]``.
    """
    out = validate_category(c)
    if out:
        return out, {}
    inv: dict[tuple[int, int], dict[str, str]] = {}
    for i in range(1, c.N + 1):
        for j in range(i):
            table = {}
            for u in c.cells_at(i):
                w = find_inverse(c, i, j, u)
                if w is None:
                    out.append(Violation("inverse", f"{i}-cell {u} has no *{i}_{j}-inverse", (u, i, j)))
                else:
                    table[u] = w
            inv[(i, j)] = table
    if not out:
        c._cache["inv"] = inv
    return out, inv


def as_groupoid(c: OmegaCat) -> OmegaCat:
    """Validate ``c`` as a groupoid (cached), raising ``NotAGroupoid`` otherwise."""
    if "inv" not in c._cache:
        report, _ = validate_groupoid(c)
        if report:
            raise NotAGroupoid(str(report[0]))
    return c


def inverse(g: OmegaCat, i: int, j: int, u: str) -> str:
    """``w^i_j(u)``, the ``*_j``-inverse of an ``i``-cell of a groupoid."""
    if i > g.N:
        if j == i - 1:
            return u
        return ident(inverse(g, i - 1, j, u[len(ID):]))
    return as_groupoid(g)._cache["inv"][(i, j)][u]


def _admits(c: OmegaCat, i: int, j: int) -> bool:
    return all(find_inverse(c, i, j, u) is not None for u in c.cells_at(i))


def check_invertibility_equivalence(c: OmegaCat) -> dict:
    """Evaluate the four equivalent forms of being a groupoid independently.

    On groupoids the inverses rebuilt from the whiskering formulas are also
    compared against the searched inverse tables.
    """
    N = c.N
    adm = {(i, j): _admits(c, i, j) for i in range(1, N + 1) for j in range(i)}
    a1 = all(adm.values())
    a2 = all(adm[(i, i - 1)] for i in range(1, N + 1))
    a3 = all(adm[(i, 0)] for i in range(1, N + 1))
    a4 = all(any(adm[(i, j)] for j in range(i)) for i in range(1, N + 1))
    result = {"all": a1, "vertical": a2, "horizontal": a3, "some": a4,
              "agree": a1 == a2 == a3 == a4, "reconstructed": None, "mismatches": []}
    if a1:
        mismatches = []
        for i in range(2, N + 1):
            for k in range(i - 1):
                for a in c.cells_at(i):
                    vert = find_inverse(c, i, i - 1, a)
                    hor = find_inverse(c, i, k, a)
                    h = horizontal_inverse_from_vertical(c, a, vert, i=i, k=k)
                    v = vertical_inverse_from_horizontal(c, a, hor, i=i, k=k)
                    if h != hor or v != vert:
                        mismatches.append((a, i, k))
        result["reconstructed"] = not mismatches
        result["mismatches"] = mismatches
    return result


def is_infinity_n_category(c: OmegaCat, n: int) -> bool:
    return all(_admits(c, i, j) for i in range(n + 1, c.N + 1) for j in range(n, i))


# homotopy

def homotopy_relation(g: OmegaCat, n: int) -> dict[str, str]:
    """Classes of ``n``-cells under "joined by an (n+1)-cell", as representatives.

    Raises ``NotAGroupoid`` when the raw relation is not an equivalence.
    """
    key = ("sim", n)
    if key in g._cache:
        return g._cache[key]
    cells = g.cells_at(n)
    rel = {(g.s(n + 1, a), g.t(n + 1, a)) for a in g.cells_at(n + 1)}
    for u in cells:
        if (u, u) not in rel:
            raise NotAGroupoid(f"homotopy is not reflexive at {u}")
    for u, v in rel:
        if (v, u) not in rel:
            raise NotAGroupoid(f"homotopy is not symmetric at ({u}, {v})")
    succ: dict[str, set[str]] = {}
    for u, v in rel:
        succ.setdefault(u, set()).add(v)
    for u, v in rel:
        if not succ[v] <= succ[u]:
            raise NotAGroupoid(f"homotopy is not transitive through {v}")
    classes = {u: min(succ[u]) for u in cells}
    g._cache[key] = classes
    return classes


def varpi(g: OmegaCat, n: int) -> FinGroupoid:
    """Groupoid of ``(n-1)``-cells and homotopy classes of ``n``-cells."""
    if n < 1:
        raise ValueError("varpi needs n >= 1")
    key = ("varpi", n)
    if key in g._cache:
        return g._cache[key]
    cls = homotopy_relation(g, n)
    morphisms = {}
    for a in g.cells_at(n):
        morphisms[cls[a]] = (g.s(n, a), g.t(n, a))
    comp: dict[tuple[str, str], str] = {}
    for b, a in g.composable_pairs(n, n - 1):
        key2 = (cls[b], cls[a])
        w = cls[g.compose(n, n - 1, b, a)]
        if comp.setdefault(key2, w) != w:
            raise NotAGroupoid(f"composition of classes is not well defined at {key2}")
    gd = FinGroupoid(g.cells_at(n - 1), morphisms, comp,
                     {x: cls[ident(x)] for x in g.cells_at(n - 1)})
    g._cache[key] = gd
    return gd


def pi0(g: OmegaCat) -> list[frozenset[str]]:
    return varpi(g, 1).components()


def pi_n(g: OmegaCat, x: str, n: int) -> FinGroup:
    """``pi_n(g, x)``: automorphisms of the iterated identity of ``x`` in ``varpi_n``."""
    if n < 1:
        raise ValueError("pi_n needs n >= 1")
    if not g.has(0, x):
        raise KeyError(f"unknown object {x}")
    return varpi(g, n).vertex_group(g.lift(x, 0, n - 1))


def pi_n_hom(g: OmegaCat, u: str, v: str, n: int) -> list[str]:
    return varpi(g, n).hom(u, v)


# weak equivalences

def _class_map(f: OmegaFunctor, n: int):
    src_cls = homotopy_relation(f.dom, n)
    dst_cls = homotopy_relation(f.cod, n)
    m = {}
    for a in f.dom.cells_at(n):
        m[src_cls[a]] = dst_cls[f(n, a)]
    return m


def _pi0_bijection(f) -> dict | None:
    comps_g, comps_h = pi0(f.dom), pi0(f.cod)
    where = {x: k for k, comp in enumerate(comps_h) for x in comp}
    image = {}
    for comp in comps_g:
        image[comp] = where[f(0, next(iter(comp)))]
    if len(set(image.values())) != len(comps_g):
        return {"condition": "pi0", "reason": "not injective"}
    if len(comps_g) != len(comps_h):
        return {"condition": "pi0", "reason": "not surjective"}
    return None


def _check_map(m: dict, src: list, dst: list, need_inj: bool, need_surj: bool) -> str | None:
    imgs = [m[a] for a in src]
    if need_inj and len(set(imgs)) != len(imgs):
        return "not injective"
    if need_surj and not set(dst) <= set(imgs):
        return "not surjective"
    return None


def _varpi1_check(f, full_only: bool) -> dict | None:
    G, H = varpi(f.dom, 1), varpi(f.cod, 1)
    m = _class_map(f, 1)
    for y in H.objects:
        if not any(H.hom(f(0, x), y) for x in G.objects):
            return {"condition": "varpi1", "reason": "not essentially surjective", "object": y}
    for x, y in itertools.product(G.objects, repeat=2):
        err = _check_map(m, G.hom(x, y), H.hom(f(0, x), f(0, y)), not full_only, True)
        if err:
            return {"condition": "varpi1", "reason": err, "pair": [x, y]}
    return None


def is_weak_equivalence(f: OmegaFunctor, method: int = 1) -> Verdict:
    """Weak equivalence of groupoids, by one of four equivalent conditions.

    1. pi_0 bijective and pi_n(-, x) bijective at every object;
    2. pi_0 bijective and pi_n(-, u) bijective at every (n-1)-cell;
    3. varpi_1 an equivalence and pi_n(-, u, v) bijective for parallel pairs;
    4. varpi_1 full and essentially surjective, pi_n(-, u, v) surjective.

    Homotopy is quantified up to dimension ``N+1``, where it reads the
    identity layer, so injectivity at the top dimension is part of 3 and 4.
    """
    errs = validate_functor(f)
    if errs:
        raise ValueError(f"invalid functor: {errs[0]}")
    G, H = as_groupoid(f.dom), as_groupoid(f.cod)
    name = f"grp{method}"
    top = G.N + 1
    if method in (1, 2):
        bad = _pi0_bijection(f)
        if bad:
            return Verdict(False, bad, name)
        for n in range(1, top + 1):
            m = _class_map(f, n)
            VG, VH = varpi(G, n), varpi(H, n)
            bases = (G.cells_at(0) if method == 1 else G.cells_at(n - 1))
            for x in bases:
                u = G.lift(x, 0, n - 1) if method == 1 else x
                k = 0 if method == 1 else n - 1
                fu = f(n - 1, u) if method == 2 else H.lift(f(0, x), 0, n - 1)
                err = _check_map(m, VG.hom(u, u), VH.hom(fu, fu), True, True)
                if err:
                    return Verdict(False, {"condition": f"pi{n}", "base": x, "base_dimension": k,
                                           "reason": err}, name)
        return Verdict(True, None, name)
    if method in (3, 4):
        bad = _varpi1_check(f, full_only=(method == 4))
        if bad:
            return Verdict(False, bad, name)
        for n in range(2, top + 1):
            m = _class_map(f, n)
            VG, VH = varpi(G, n), varpi(H, n)
            for u, v in G.parallel_pairs(n - 1):
                err = _check_map(m, VG.hom(u, v), VH.hom(f(n - 1, u), f(n - 1, v)),
                                 method == 3, True)
                if err:
                    return Verdict(False, {"condition": f"pi{n}", "pair": [u, v], "reason": err}, name)
        return Verdict(True, None, name)
    raise ValueError(f"unknown method {method}")
