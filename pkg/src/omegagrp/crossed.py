"""Crossed complexes, the functor A from omega-groupoids, and their homotopy."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .globular import Disagreement, Verdict, Violation, parallel
from .groups import FinGroup, FinGroupoid, GroupError, is_homomorphism
from .omega_cat import OmegaCat, OmegaFunctor, validate_functor
from .omega_grp import as_groupoid, inverse


@dataclass(eq=False)
class CrossedComplex:
    """A crossed complex truncated at ``dimension``.

    ``groups[n][x]`` is ``C_n(x)`` for ``2 <= n <= dimension``; ``C_1(x)`` is the
    vertex group of ``base``.  ``d[n][x]`` maps ``C_n(x)`` to ``C_{n-1}(x)``
    and ``action[n][u]`` maps ``C_n(x)`` to ``C_n(y)`` for ``u: x -> y``.
    Above ``dimension`` every group is trivial.
    """

    dimension: int
    base: FinGroupoid
    groups: dict[int, dict[str, FinGroup]] = field(default_factory=dict)
    d: dict[int, dict[str, dict[str, str]]] = field(default_factory=dict)
    action: dict[int, dict[str, dict[str, str]]] = field(default_factory=dict)

    def __post_init__(self):
        self._trivial = FinGroup.trivial("1")
        self._vertex: dict[str, FinGroup] = {}

    @property
    def objects(self):
        return self.base.objects

    def group(self, n: int, x: str) -> FinGroup:
        if n == 1:
            if x not in self._vertex:
                self._vertex[x] = self.base.vertex_group(x)
            return self._vertex[x]
        if n > self.dimension:
            return self._trivial
        return self.groups[n][x]

    def boundary(self, n: int, x: str, c: str) -> str:
        """``d_n`` on ``C_n(x)``, trivial above the top dimension."""
        if n > self.dimension:
            return self.group(n - 1, x).unit
        return self.d[n][x][c]

    def act(self, n: int, u: str, c: str) -> str:
        if n == 1:
            return self.base.comp[(self.base.comp[(u, c)], self.base.inverse(u))]
        if n > self.dimension:
            return c
        return self.action[n][u][c]

    def kernel(self, n: int, x: str) -> set[str]:
        G = self.group(n, x)
        e = self.group(n - 1, x).unit
        return {c for c in G.elements if self.boundary(n, x, c) == e}

    def image(self, n: int, x: str) -> set[str]:
        return {self.boundary(n, x, c) for c in self.group(n, x).elements}


def validate_crossed(c: CrossedComplex) -> list[Violation]:
    out = [Violation("base", m) for m in c.base.violations()]
    if out:
        return out
    N, B = c.dimension, c.base
    for n in range(2, N + 1):
        for x in B.objects:
            G = c.groups.get(n, {}).get(x)
            if G is None:
                out.append(Violation("shape", f"C_{n}({x}) missing"))
                continue
            out.extend(Violation("group", f"C_{n}({x}): {m}") for m in G.violations())
            if n >= 3 and not G.is_abelian():
                out.append(Violation("abelian", f"C_{n}({x}) is not abelian"))
    if out:
        return out
    for n in range(2, N + 1):
        for x in B.objects:
            G, H = c.group(n, x), c.group(n - 1, x)
            dm = c.d.get(n, {}).get(x, {})
            if any(dm.get(a) not in H for a in G.elements):
                out.append(Violation("shape", f"d_{n} at {x} does not land in C_{n - 1}({x})"))
            elif not is_homomorphism(dm, G, H):
                out.append(Violation("boundary-hom", f"d_{n} at {x} is not a homomorphism"))
    if out:
        return out
    for n in range(3, N + 1):
        for x in B.objects:
            e = c.group(n - 2, x).unit
            for a in c.group(n, x).elements:
                if c.boundary(n - 1, x, c.boundary(n, x, a)) != e:
                    out.append(Violation("dd", f"d_{n - 1} d_{n}({a}) != 1 at {x}", (a,)))
    for n in range(2, N + 1):
        for u, (x, y) in B.morphisms.items():
            m = c.action.get(n, {}).get(u)
            G, H = c.group(n, x), c.group(n, y)
            if m is None or any(m.get(a) not in H for a in G.elements):
                out.append(Violation("shape", f"action of {u} on C_{n} missing or ill-typed"))
            elif not is_homomorphism(m, G, H):
                out.append(Violation("action-hom", f"action of {u} on C_{n} is not a homomorphism"))
    if out:
        return out
    for n in range(2, N + 1):
        for x in B.objects:
            ex = B.ident[x]
            if any(c.act(n, ex, a) != a for a in c.group(n, x).elements):
                out.append(Violation("action-unit", f"identity of {x} acts nontrivially on C_{n}"))
        for (v, u), w in B.comp.items():
            x = B.src(u)
            for a in c.group(n, x).elements:
                if c.act(n, w, a) != c.act(n, v, c.act(n, u, a)):
                    out.append(Violation("action-functor", f"({v}.{u}) acts differently from {v} after {u} on {a}", (v, u, a)))
                    break
        for u, (x, y) in B.morphisms.items():
            for a in c.group(n, x).elements:
                if c.boundary(n, y, c.act(n, u, a)) != c.act(n - 1, u, c.boundary(n, x, a)):
                    out.append(Violation("naturality", f"d_{n} does not commute with the action of {u} on {a}", (u, a)))
    for x in B.objects if N >= 2 else ():
        C2 = c.group(2, x)
        for a in C2.elements:
            da = c.boundary(2, x, a)
            for b in C2.elements:
                if c.act(2, da, b) != C2.mul(C2.mul(a, b), C2.inv(a)):
                    out.append(Violation("crossed-module", f"d_2({a}) does not act on {b} by conjugation by {a} at {x}", (a, b)))
            for n in range(3, N + 1):
                if any(c.act(n, da, b) != b for b in c.group(n, x).elements):
                    out.append(Violation("crossed-module", f"d_2({a}) acts nontrivially on C_{n}({x})", (a,)))
    return out


@dataclass(eq=False)
class CrossedMorphism:
    dom: CrossedComplex
    cod: CrossedComplex
    objects: dict[str, str]
    morphisms: dict[str, str]
    maps: dict[int, dict[str, dict[str, str]]] = field(default_factory=dict)

    def apply(self, n: int, x: str, a: str) -> str:
        """The image of ``a`` in ``C_n(x)``."""
        if n == 1:
            return self.morphisms[a]
        if n > self.dom.dimension or n > self.cod.dimension:
            return self.cod.group(n, self.objects[x]).unit
        return self.maps[n][x][a]


def validate_cc_morphism(f: CrossedMorphism) -> list[Violation]:
    C, D = f.dom, f.cod
    out = []
    if C.dimension != D.dimension:
        out.append(Violation("dimension", "crossed complexes of different dimension"))
        return out
    BC, BD = C.base, D.base
    for x in BC.objects:
        if f.objects.get(x) not in BD.objects:
            out.append(Violation("totality", f"object {x} has no image"))
    for u, (x, y) in BC.morphisms.items():
        m = f.morphisms.get(u)
        if m is None or BD.morphisms.get(m) != (f.objects.get(x), f.objects.get(y)):
            out.append(Violation("base", f"morphism {u} is not sent to a morphism f({x}) -> f({y})", (u,)))
    if out:
        return out
    for x in BC.objects:
        if f.morphisms[BC.ident[x]] != BD.ident[f.objects[x]]:
            out.append(Violation("base", f"identity of {x} not preserved"))
    for (v, u), w in BC.comp.items():
        if f.morphisms[w] != BD.comp[(f.morphisms[v], f.morphisms[u])]:
            out.append(Violation("base", f"composite {v}.{u} not preserved", (v, u)))
    for n in range(2, C.dimension + 1):
        for x in BC.objects:
            G, H = C.group(n, x), D.group(n, f.objects[x])
            m = f.maps.get(n, {}).get(x, {})
            if any(m.get(a) not in H for a in G.elements):
                out.append(Violation("totality", f"f_{n} at {x} is not total into D_{n}"))
            elif not is_homomorphism(m, G, H):
                out.append(Violation("group-hom", f"f_{n} at {x} is not a homomorphism"))
    if out:
        return out
    for n in range(2, C.dimension + 1):
        for x in BC.objects:
            for a in C.group(n, x).elements:
                fa = f.apply(n, x, a)
                if D.boundary(n, f.objects[x], fa) != f.apply(n - 1, x, C.boundary(n, x, a)):
                    out.append(Violation("boundary", f"f does not commute with d_{n} at {a}", (a,)))
        for u, (x, y) in BC.morphisms.items():
            for a in C.group(n, x).elements:
                if f.apply(n, y, C.act(n, u, a)) != D.act(n, f.morphisms[u], f.apply(n, x, a)):
                    out.append(Violation("action", f"f does not commute with the action of {u} on {a}", (u, a)))
    return out


# the functor A

def based_cells(g: OmegaCat, x: str, n: int) -> list[str]:
    """``n``-cells whose ``(n-1)``-source is the iterated identity of ``x``; loops when n = 1."""
    if n == 1:
        return g.homset(1, x, x)
    return [u for u in g.cells_at(n) if g.s(n, u) == g.lift(x, 0, n - 1)]


def fundamental_groupoid_base(g: OmegaCat) -> FinGroupoid:
    """The 1-truncation of ``g`` as a finite groupoid."""
    morphisms = {u: (g.s(1, u), g.t(1, u)) for u in g.cells_at(1)}
    comp = {(v, u): g.compose(1, 0, v, u) for v, u in g.composable_pairs(1, 0)}
    return FinGroupoid(g.cells_at(0), morphisms, comp, {x: g.lift(x, 0, 1) for x in g.cells_at(0)})


def functor_A(g: OmegaCat) -> CrossedComplex:
    """The crossed complex of cells based at iterated identities."""
    as_groupoid(g)
    N = g.N
    groups, d, action = {}, {}, {}
    for n in range(2, N + 1):
        groups[n], d[n], action[n] = {}, {}, {}
        for x in g.cells_at(0):
            els = based_cells(g, x, n)
            groups[n][x] = FinGroup.from_function(
                els, lambda a, b, n=n: g.compose(n, 0, a, b), g.lift(x, 0, n))
            d[n][x] = {a: g.t(n, a) for a in els}
        for u in g.cells_at(1):
            x = g.s(1, u)
            left, right = g.lift(u, 1, n), g.lift(inverse(g, 1, 0, u), 1, n)
            action[n][u] = {a: g.compose(n, 0, g.compose(n, 0, left, a), right)
                            for a in groups[n][x].elements}
    return CrossedComplex(N, fundamental_groupoid_base(g), groups, d, action)


def functor_A_morphism(f: OmegaFunctor, dom: CrossedComplex | None = None,
                       cod: CrossedComplex | None = None) -> CrossedMorphism:
    errs = validate_functor(f)
    if errs:
        raise ValueError(f"invalid functor: {errs[0]}")
    A, B = dom or functor_A(f.dom), cod or functor_A(f.cod)
    maps = {n: {x: {a: f(n, a) for a in A.group(n, x).elements} for x in A.objects}
            for n in range(2, A.dimension + 1)}
    return CrossedMorphism(A, B, {x: f(0, x) for x in f.dom.cells_at(0)},
                           {u: f(1, u) for u in f.dom.cells_at(1)}, maps)


# homotopy of crossed complexes

def cc_pi0(c: CrossedComplex) -> list[frozenset[str]]:
    return c.base.components()


def _homology(c: CrossedComplex, n: int, x: str) -> tuple[FinGroup, dict[str, str]]:
    """``ker d_n / im d_{n+1}`` at ``x``, with ``ker d_1`` read as all of ``C_1(x)``."""
    G = c.group(n, x)
    ker = set(G.elements) if n == 1 else c.kernel(n, x)
    im = c.image(n + 1, x)
    if not im <= ker:
        raise GroupError(f"im d_{n + 1} is not contained in ker d_{n} at {x}")
    K = G.subgroup(ker)
    if not K.is_normal(im):
        raise GroupError(f"im d_{n + 1} is not normal at {x}")
    return K.quotient(im)


def cc_pi1(c: CrossedComplex, x: str) -> FinGroup:
    return _homology(c, 1, x)[0]


def cc_pin(c: CrossedComplex, x: str, n: int) -> FinGroup:
    if n < 1:
        raise ValueError("cc_pin needs n >= 1")
    if x not in c.base.objects:
        raise KeyError(f"unknown object {x}")
    if n == 2:
        center = c.kernel(2, x)
        C2 = c.group(2, x)
        if not all(C2.mul(a, b) == C2.mul(b, a) for a in center for b in C2.elements):
            raise GroupError(f"ker d_2 is not central at {x}")
    return _homology(c, n, x)[0]


def _induced_bijective(f: CrossedMorphism, n: int, x: str) -> bool:
    Q, p = _homology(f.dom, n, x)
    R, q = _homology(f.cod, n, f.objects[x])
    image = {q[f.apply(n, x, a)] for a in Q.elements}
    return len(image) == len(Q) == len(R)


def is_cc_weak_equivalence(f: CrossedMorphism) -> Verdict:
    errs = validate_cc_morphism(f)
    if errs:
        raise ValueError(f"invalid crossed morphism: {errs[0]}")
    comps_c, comps_d = cc_pi0(f.dom), cc_pi0(f.cod)
    where = {y: k for k, comp in enumerate(comps_d) for y in comp}
    hit = {where[f.objects[next(iter(comp))]] for comp in comps_c}
    if len(hit) != len(comps_c) or len(comps_c) != len(comps_d):
        return Verdict(False, {"condition": "pi0"}, "cc")
    for n in range(1, f.dom.dimension + 2):
        for x in f.dom.objects:
            if not _induced_bijective(f, n, x):
                return Verdict(False, {"condition": f"pi{n}", "base": x}, "cc")
    return Verdict(True, None, "cc")


def is_cc_trivial_fibration(f: CrossedMorphism) -> Verdict:
    """Objects, morphisms and boundaries lift; lifting data run up to ``N+1``.

    For ``n >= 3`` the boundary ``t`` ranges over cycles of ``C_{n-1}(x)``.
    """
    errs = validate_cc_morphism(f)
    if errs:
        raise ValueError(f"invalid crossed morphism: {errs[0]}")
    C, D = f.dom, f.cod
    images = set(f.objects.values())
    for y in D.objects:
        if y not in images:
            return Verdict(False, {"condition": "objects", "object": y}, "cc")
    for x, xp in itertools.product(C.objects, repeat=2):
        got = {f.morphisms[u] for u in C.base.hom(x, xp)}
        for v in D.base.hom(f.objects[x], f.objects[xp]):
            if v not in got:
                return Verdict(False, {"condition": "morphisms", "pair": [x, xp], "cell": v}, "cc")
    for n in range(2, C.dimension + 2):
        for x in C.objects:
            fx = f.objects[x]
            lifts: dict[str, set[str]] = {}
            for a in C.group(n, x).elements:
                lifts.setdefault(C.boundary(n, x, a), set()).add(f.apply(n, x, a))
            for t in C.group(n - 1, x).elements:
                if n >= 3 and C.boundary(n - 1, x, t) != C.group(n - 2, x).unit:
                    continue
                ft = f.apply(n - 1, x, t)
                for v in D.group(n, fx).elements:
                    if D.boundary(n, fx, v) == ft and v not in lifts.get(t, ()):
                        return Verdict(False, {"condition": "boundaries", "dimension": n,
                                               "base": x, "boundary": t, "cell": v}, "cc")
    return Verdict(True, None, "cc")


def grp_tfib_direct(f: OmegaFunctor) -> Verdict:
    """The crossed-complex trivial-fibration conditions read on the groupoids."""
    G, H = as_groupoid(f.dom), as_groupoid(f.cod)
    images = {f(0, x) for x in G.cells_at(0)}
    for y in H.cells_at(0):
        if y not in images:
            return Verdict(False, {"condition": "objects", "object": y}, "grp-cc")
    for x, xp in itertools.product(G.cells_at(0), repeat=2):
        got = {f(1, u) for u in G.homset(1, x, xp)}
        for v in H.homset(1, f(0, x), f(0, xp)):
            if v not in got:
                return Verdict(False, {"condition": "morphisms", "pair": [x, xp], "cell": v}, "grp-cc")
    for n in range(2, G.N + 2):
        for x in G.cells_at(0):
            one = G.lift(x, 0, n - 1)
            one_f = H.lift(f(0, x), 0, n - 1)
            for t in based_cells(G, x, n - 1):
                if not parallel(G, n - 1, t, one):
                    continue
                got = {f(n, a) for a in G.homset(n, one, t)}
                for b in H.homset(n, one_f, f(n - 1, t)):
                    if b not in got:
                        return Verdict(False, {"condition": "boundaries", "dimension": n,
                                               "base": x, "boundary": t, "cell": b}, "grp-cc")
    return Verdict(True, None, "grp-cc")


def is_grp_tfib_cc(f: OmegaFunctor) -> Verdict:
    """Trivial fibration in the crossed-complex sense, by two routes that must agree."""
    direct = grp_tfib_direct(f)
    via_a = is_cc_trivial_fibration(functor_A_morphism(f))
    if direct.holds != via_a.holds:
        raise Disagreement(f"groupoid-side {direct} and crossed-complex side {via_a} disagree")
    return Verdict(direct.holds, direct.witness, "cc")
