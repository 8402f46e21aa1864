"""Small strict omega-categories and groupoids used as examples and test corpus."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .groups import FinGroup
from .omega_cat import (
    CompositionError,
    OmegaCat,
    OmegaFunctor,
    from_ops,
    functor_from_function,
    lift_truncation,
)


def _built(cat_names):
    cat, names = cat_names
    cat.names = names
    cat.abstract = [{v: k for k, v in nm.items()} for nm in names]
    return cat


def functor_from_abstract(dom: OmegaCat, cod: OmegaCat, fn: Callable) -> OmegaFunctor:
    """Functor given on the abstract cells both categories were built from."""
    return functor_from_function(
        dom, cod, lambda k, u: cod.names[k][fn(k, dom.abstract[k][u])])


# sets and codiscrete groupoids

def codiscrete(objects, N: int = 1) -> OmegaCat:
    """The groupoid with exactly one 1-cell between any two objects."""
    objects = list(objects)
    cells = [[("o", x) for x in objects]]
    if N >= 1:
        cells.append([("a", x, y) for x in objects for y in objects])
    for k in range(2, N + 1):
        cells.append([("i", c) for c in cells[k - 1]])

    def src2(k, c):
        return ("o", c[1]) if c[0] == "a" else c[1]

    def tgt2(k, c):
        return ("o", c[2]) if c[0] == "a" else c[1]

    def unit(k, c):
        return ("a", c[1], c[1]) if k == 0 else ("i", c)

    def compose(i, j, u, v):
        if i == 1:
            return ("a", v[1], u[2])
        if j == i - 1:
            return v if u == v else _bad()
        return ("i", compose(i - 1, j, u[1], v[1]))

    def label(c):
        return c[1] if c[0] == "o" else f"{c[1]}>{c[2]}"

    return _built(from_ops(N, cells, src2, tgt2, unit, compose, label))


def _bad():
    raise CompositionError("not composable")


def discrete(objects, N: int = 0) -> OmegaCat:
    objects = list(objects)
    cells = [[("o", x) for x in objects]]
    for k in range(1, N + 1):
        cells.append([("i", c) for c in cells[k - 1]])
    return _built(from_ops(
        N, cells, lambda k, c: c[1], lambda k, c: c[1], lambda k, c: ("i", c),
        lambda i, j, u, v: u if j == i - 1 else ("i", _compose_ids(i - 1, j, u[1], v[1])),
        lambda c: c[1]))


def _compose_ids(i, j, u, v):
    if u[0] == "o":
        return u
    if j == i - 1:
        return u
    return ("i", _compose_ids(i - 1, j, u[1], v[1]))


def point(N: int = 0) -> OmegaCat:
    return discrete(["*"], N)


def interval(N: int = 1) -> OmegaCat:
    """The groupoid ``x <-> y`` with one invertible 1-cell each way."""
    return codiscrete(["x", "y"], N)


# groups

def symmetric3() -> FinGroup:
    perms = ["".join(map(str, p)) for p in itertools.permutations(range(3))]
    return FinGroup.from_function(
        perms, lambda a, b: "".join(a[int(b[i])] for i in range(3)), "012")


def klein4() -> FinGroup:
    els = ["00", "01", "10", "11"]
    return FinGroup.from_function(
        els, lambda a, b: "".join(str((int(p) + int(q)) % 2) for p, q in zip(a, b)), "00")


def direct_product(G: FinGroup, H: FinGroup) -> FinGroup:
    els = [f"{a},{b}" for a in G.elements for b in H.elements]

    def mul(x, y):
        a1, b1 = x.split(",")
        a2, b2 = y.split(",")
        return f"{G.mul(a1, a2)},{H.mul(b1, b2)}"

    return FinGroup.from_function(els, mul, f"{G.unit},{H.unit}")


# monoids and groups as one-object categories

@dataclass
class Monoid:
    elements: tuple[str, ...]
    mul: Callable[[str, str], str]
    unit: str


def cyclic_multiplicative_monoid(n: int) -> Monoid:
    """``{0, ..., n-1}`` under multiplication mod ``n``; not a group for n > 1."""
    return Monoid(tuple(str(k) for k in range(n)), lambda a, b: str(int(a) * int(b) % n), "1")


def saturating_monoid(n: int) -> Monoid:
    """``{0, ..., n}`` under addition capped at ``n``."""
    return Monoid(tuple(str(k) for k in range(n + 1)), lambda a, b: str(min(int(a) + int(b), n)), "0")


def group_as_monoid(G: FinGroup) -> Monoid:
    return Monoid(G.elements, G.mul, G.unit)


def delooping(M, N: int = 1) -> OmegaCat:
    """One object ``*`` whose 1-cells are the elements of ``M``."""
    if isinstance(M, FinGroup):
        M = group_as_monoid(M)
    cells = [[("o",)], [("m", m) for m in M.elements]]
    for k in range(2, N + 1):
        cells.append([("i", c) for c in cells[k - 1]])

    def src(k, c):
        return ("o",) if c[0] == "m" else c[1]

    def unit(k, c):
        return ("m", M.unit) if k == 0 else ("i", c)

    def compose(i, j, u, v):
        if i == 1:
            return ("m", M.mul(u[1], v[1]))
        if j == i - 1:
            return u
        return ("i", compose(i - 1, j, u[1], v[1]))

    return _built(from_ops(N, cells, src, src, unit, compose,
                           lambda c: "*" if c[0] == "o" else c[1]))


def double_delooping(M, N: int = 2) -> OmegaCat:
    """One object, one 1-cell, and 2-cells the elements of a commutative monoid."""
    if isinstance(M, FinGroup):
        M = group_as_monoid(M)
    cells = [[("o",)], [("e",)], [("m", m) for m in M.elements]]
    for k in range(3, N + 1):
        cells.append([("i", c) for c in cells[k - 1]])

    def src(k, c):
        if k == 1:
            return ("o",)
        if k == 2:
            return ("e",)
        return c[1]

    def unit(k, c):
        return {0: ("e",), 1: ("m", M.unit)}.get(k, ("i", c))

    def compose(i, j, u, v):
        if i == 1:
            return ("e",)
        if i == 2:
            return ("m", M.mul(u[1], v[1]))
        if j == i - 1:
            return u
        return ("i", compose(i - 1, j, u[1], v[1]))

    return _built(from_ops(N, cells, src, src, unit, compose,
                           lambda c: {"o": "*", "e": "1*"}.get(c[0], c[-1] if c[0] == "m" else "?")))


# strict 2-groups from crossed modules

@dataclass
class CrossedModule:
    """A group ``H`` over a group ``G``: boundary ``H -> G`` and action of ``G`` on ``H``."""

    G: FinGroup
    H: FinGroup
    boundary: dict[str, str]
    act: Callable[[str, str], str]   # act(g, h) = g . h

    def violations(self) -> list[str]:
        G, H, d = self.G, self.H, self.boundary
        out = []
        for g in G.elements:
            for h in H.elements:
                if d[self.act(g, h)] != G.mul(G.mul(g, d[h]), G.inv(g)):
                    out.append(f"equivariance fails at ({g},{h})")
        for h in H.elements:
            for hp in H.elements:
                if self.act(d[h], hp) != H.mul(H.mul(h, hp), H.inv(h)):
                    out.append(f"Peiffer identity fails at ({h},{hp})")
        return out


def two_group(cm: CrossedModule, N: int = 2, label: Callable | None = None) -> OmegaCat:
    """The strict 2-group with 1-cells ``G`` and 2-cells ``(h, g): g -> d(h) g``."""
    bad = cm.violations()
    if bad:
        raise ValueError(bad[0])
    G, H, d = cm.G, cm.H, cm.boundary
    cells = [[("o",)], [("g", g) for g in G.elements],
             [("c", h, g) for h in H.elements for g in G.elements]]
    for k in range(3, N + 1):
        cells.append([("i", c) for c in cells[k - 1]])

    def src(k, c):
        if k == 1:
            return ("o",)
        if k == 2:
            return ("g", c[2])
        return c[1]

    def tgt(k, c):
        if k == 1:
            return ("o",)
        if k == 2:
            return ("g", G.mul(d[c[1]], c[2]))
        return c[1]

    def unit(k, c):
        if k == 0:
            return ("g", G.unit)
        if k == 1:
            return ("c", H.unit, c[1])
        return ("i", c)

    def compose(i, j, u, v):
        if i == 1:
            return ("g", G.mul(u[1], v[1]))
        if i == 2 and j == 1:
            return ("c", H.mul(u[1], v[1]), v[2])
        if i == 2:
            return ("c", H.mul(u[1], cm.act(u[2], v[1])), G.mul(u[2], v[2]))
        if j == i - 1:
            return u
        return ("i", compose(i - 1, j, u[1], v[1]))

    def default_label(c):
        if c[0] == "o":
            return "*"
        if c[0] == "g":
            return c[1]
        return f"{c[1]}@{c[2]}"

    return _built(from_ops(max(N, 2), cells, src, tgt, unit, compose, label or default_label))


def trivial_action(g, h):
    return h


def conjugation(G: FinGroup):
    return lambda g, h: G.mul(G.mul(g, h), G.inv(g))


def contractible_two_group(G: FinGroup) -> OmegaCat:
    return two_group(CrossedModule(G, G, {g: g for g in G.elements}, conjugation(G)))


def b2(A: FinGroup, N: int = 2) -> OmegaCat:
    """``B^2 A`` for an abelian group ``A``: one object, one 1-cell, 2-cells ``A``."""
    T = FinGroup.trivial("e")
    return two_group(CrossedModule(T, A, {h: "e" for h in A.elements}, trivial_action), N,
                     label=lambda c: {"o": "*", "g": "1*"}.get(c[0]) or c[1])


def crossed_module_map(src: OmegaCat, dst: OmegaCat, phi_G: dict, phi_H: dict) -> OmegaFunctor:
    def fn(k, c):
        if c[0] == "o":
            return c
        if c[0] == "g":
            return ("g", phi_G[c[1]])
        if c[0] == "c":
            return ("c", phi_H[c[1]], phi_G[c[2]])
        return ("i", fn(k - 1, c[1]))
    return functor_from_abstract(src, dst, fn)


# products and sums

def product(a: OmegaCat, b: OmegaCat) -> OmegaCat:
    if a.N != b.N:
        raise ValueError("product needs equal truncation levels")
    N = a.N
    cells = [[(u, v) for u in a.cells_at(k) for v in b.cells_at(k)] for k in range(N + 1)]
    return _built(from_ops(
        N, cells,
        lambda k, c: (a.s(k, c[0]), b.s(k, c[1])),
        lambda k, c: (a.t(k, c[0]), b.t(k, c[1])),
        lambda k, c: ("id:" + c[0], "id:" + c[1]),
        lambda i, j, u, v: (a.compose(i, j, u[0], v[0]), b.compose(i, j, u[1], v[1])),
        lambda c: f"({c[0]}|{c[1]})"))


def product_projection(a: OmegaCat, b: OmegaCat, p: OmegaCat, factor: int) -> OmegaFunctor:
    target = (a, b)[factor]
    return functor_from_function(p, target, lambda k, u: p.abstract[k][u][factor])


def product_section(a: OmegaCat, b: OmegaCat, p: OmegaCat, factor: int, point_cell: str) -> OmegaFunctor:
    """Inclusion of one factor at a chosen object of the other factor."""
    other = (b, a)[factor]
    src = (a, b)[factor]

    def fn(k, u):
        w = other.lift(point_cell, 0, k)
        pair = (u, w) if factor == 0 else (w, u)
        return p.names[k][pair]

    return functor_from_function(src, p, fn)


def disjoint_union(a: OmegaCat, b: OmegaCat) -> OmegaCat:
    if a.N != b.N:
        raise ValueError("disjoint union needs equal truncation levels")
    N = a.N
    parts = (a, b)
    cells = [[(side, u) for side in (0, 1) for u in parts[side].cells_at(k)] for k in range(N + 1)]

    def compose(i, j, u, v):
        if u[0] != v[0]:
            raise CompositionError("different components")
        return (u[0], parts[u[0]].compose(i, j, u[1], v[1]))

    return _built(from_ops(
        N, cells,
        lambda k, c: (c[0], parts[c[0]].s(k, c[1])),
        lambda k, c: (c[0], parts[c[0]].t(k, c[1])),
        lambda k, c: (c[0], "id:" + c[1]),
        compose,
        lambda c: ("L." if c[0] == 0 else "R.") + c[1]))


# non-groupoid examples

def parallel_pair(N: int = 1) -> OmegaCat:
    """Objects ``a, b`` and two non-invertible 1-cells ``f, g: a -> b``."""
    cells = [[("o", "a"), ("o", "b")],
             [("i", ("o", "a")), ("i", ("o", "b")), ("m", "f"), ("m", "g")]]
    for k in range(2, N + 1):
        cells.append([("i", c) for c in cells[k - 1]])

    def src(k, c):
        return ("o", "a") if c[0] == "m" else c[1]

    def tgt(k, c):
        return ("o", "b") if c[0] == "m" else c[1]

    def c1(i, j, u, v):
        if i == 1:
            return v if u[0] == "i" else u
        if j == i - 1:
            return u
        return ("i", c1(i - 1, j, u[1], v[1]))

    return _built(from_ops(N, cells, src, tgt, lambda k, c: ("i", c), c1,
                           lambda c: c[1]))


def parallel_pair_2iso() -> OmegaCat:
    """The parallel pair with an invertible 2-cell ``f => g``: an (omega,1)-category."""
    cells = [[("o", "a"), ("o", "b")],
             [("i", ("o", "a")), ("i", ("o", "b")), ("m", "f"), ("m", "g")]]
    cells.append([("i", c) for c in cells[1]] + [("2", "alpha"), ("2", "beta")])
    ends = {"alpha": (("m", "f"), ("m", "g")), "beta": (("m", "g"), ("m", "f"))}

    def src(k, c):
        if c[0] == "m":
            return ("o", "a")
        if c[0] == "2":
            return ends[c[1]][0]
        return c[1]

    def tgt(k, c):
        if c[0] == "m":
            return ("o", "b")
        if c[0] == "2":
            return ends[c[1]][1]
        return c[1]

    def compose(i, j, u, v):
        if i == 1:
            return v if u[0] == "i" else u
        if j == 1:
            if u[0] == "i":
                return v
            if v[0] == "i":
                return u
            return ("i", src(2, v))
        # j == 0: one side is an identity of an object identity
        if u[0] == "i" and u[1][0] == "i":
            return v
        return u

    return _built(from_ops(2, cells, src, tgt, lambda k, c: ("i", c), compose,
                           lambda c: c[1]))


# random families

def _small_groups():
    return [FinGroup.cyclic(1), FinGroup.cyclic(2), FinGroup.cyclic(3), FinGroup.cyclic(4),
            klein4(), symmetric3()]


def random_crossed_module(rng: random.Random) -> CrossedModule:
    kind = rng.choice(["identity", "trivial", "cyclic", "normal", "inversion"])
    if kind == "identity":
        G = rng.choice([FinGroup.cyclic(2), FinGroup.cyclic(3), symmetric3()])
        return CrossedModule(G, G, {g: g for g in G.elements}, conjugation(G))
    if kind == "trivial":
        G = rng.choice(_small_groups()[:5])
        A = rng.choice([FinGroup.cyclic(1), FinGroup.cyclic(2), FinGroup.cyclic(3)])
        return CrossedModule(G, A, {h: G.unit for h in A.elements}, trivial_action)
    if kind == "cyclic":
        m, n = rng.choice([(2, 4), (4, 2), (3, 3), (2, 2), (3, 6), (6, 3), (2, 6)])
        ks = [k for k in range(n) if (k * m) % n == 0]
        k = rng.choice(ks)
        return CrossedModule(FinGroup.cyclic(n), FinGroup.cyclic(m),
                             {str(h): str(k * h % n) for h in range(m)}, trivial_action)
    if kind == "normal":
        G = symmetric3()
        A3 = G.subgroup({"012", "120", "201"})
        return CrossedModule(G, A3, {h: h for h in A3.elements}, conjugation(G))
    Z2, Z3 = FinGroup.cyclic(2), FinGroup.cyclic(3)
    return CrossedModule(Z2, Z3, {h: "0" for h in Z3.elements},
                         lambda g, h: h if g == "0" else str(-int(h) % 3))


def random_two_groupoid(seed: int) -> OmegaCat:
    """A random 2-truncated groupoid: a 2-group, possibly spread over objects."""
    rng = random.Random(seed)
    g = two_group(random_crossed_module(rng))
    shape = rng.choice(["plain", "plain", "codiscrete", "sum"])
    if shape == "codiscrete" and len(g.cells_at(2)) <= 18:
        g = product(codiscrete(["x", "y"], 2), g)
    elif shape == "sum":
        g = disjoint_union(g, rng.choice([point(2), interval(2), delooping(FinGroup.cyclic(2), 2)]))
    return g


def random_two_category(seed: int) -> OmegaCat:
    """A random 2-truncated category, groupoid or not."""
    rng = random.Random(seed)
    kind = rng.choice(["groupoid", "monoid", "cmonoid", "pair", "pair2", "mixed"])
    if kind == "groupoid":
        return random_two_groupoid(seed)
    if kind == "monoid":
        return delooping(rng.choice([cyclic_multiplicative_monoid(rng.choice([2, 3, 4])),
                                     saturating_monoid(rng.choice([1, 2]))]), 2)
    if kind == "cmonoid":
        return double_delooping(rng.choice([cyclic_multiplicative_monoid(3), saturating_monoid(2)]), 2)
    if kind == "pair":
        return parallel_pair(2)
    if kind == "pair2":
        return parallel_pair_2iso()
    return product(delooping(saturating_monoid(1), 2), b2(FinGroup.cyclic(rng.choice([2, 3]))))
