"""Cylinders: the path-object construction on strict omega-categories.

A cylinder of level ``n`` at depth ``d`` lives in a hom-category of ``C``
whose objects are ``d``-cells.  Its ``top`` and ``bot`` are ``(n+d)``-cells
of ``C``; the ``k``-composition of the hom-category is ``*_{k+d}`` in ``C``.

* level 0 carries a reversible ``(d+1)``-cell ``principal: top -> bot``;
* level ``n > 0`` carries reversible ``(d+1)``-cells ``src_anchor`` and
  ``tgt_anchor`` between the ``d``-boundaries of ``top`` and ``bot``, and a
  level ``n-1`` cylinder ``shifted`` at depth ``d+1`` from
  ``tgt_anchor *_d top`` to ``bot *_d src_anchor``.

Hom-categories are never built.  Cells above the truncation level are the
identity cells answered by ``OmegaCat``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterator

from .globular import Violation
from .omega_cat import CompositionError, OmegaCat, OmegaFunctor, reversibility_table, validate_functor
from .omega_grp import as_groupoid, inverse


@dataclass(frozen=True)
class Cylinder:
    level: int
    depth: int
    top: str
    bot: str
    principal: str | None = None
    src_anchor: str | None = None
    tgt_anchor: str | None = None
    shifted: "Cylinder | None" = None

    @property
    def dim(self) -> int:
        """Dimension in ``C`` of ``top`` and ``bot``."""
        return self.level + self.depth

    def cells(self) -> Iterator[tuple[int, str]]:
        """Every cell mentioned, with its dimension."""
        yield self.dim, self.top
        yield self.dim, self.bot
        if self.level == 0:
            yield self.depth + 1, self.principal
        else:
            yield self.depth + 1, self.src_anchor
            yield self.depth + 1, self.tgt_anchor
            yield from self.shifted.cells()

    def to_record(self) -> dict:
        rec = {"level": self.level, "depth": self.depth, "top": self.top, "bot": self.bot}
        if self.level == 0:
            rec["principal"] = self.principal
        else:
            rec.update(src_anchor=self.src_anchor, tgt_anchor=self.tgt_anchor,
                       shifted=self.shifted.to_record())
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "Cylinder":
        if rec["level"] == 0:
            return cls(0, rec["depth"], rec["top"], rec["bot"], principal=rec["principal"])
        return cls(rec["level"], rec["depth"], rec["top"], rec["bot"],
                   src_anchor=rec["src_anchor"], tgt_anchor=rec["tgt_anchor"],
                   shifted=cls.from_record(rec["shifted"]))


class CylinderError(ValueError):
    pass


def _whisker_left(c: OmegaCat, a: str, x: str, dim: int, d: int) -> str:
    """``a *_d x`` for a ``(d+1)``-cell ``a`` and a ``dim``-cell ``x``."""
    return c.compose(dim, d, c.lift(a, d + 1, dim), x)


def _whisker_right(c: OmegaCat, x: str, a: str, dim: int, d: int) -> str:
    return c.compose(dim, d, x, c.lift(a, d + 1, dim))


def shifted_ends(c: OmegaCat, U: Cylinder) -> tuple[str, str]:
    """The top and bottom required of ``U.shifted``."""
    return (_whisker_left(c, U.tgt_anchor, U.top, U.dim, U.depth),
            _whisker_right(c, U.bot, U.src_anchor, U.dim, U.depth))


# validation

def validate_cylinder(c: OmegaCat, U: Cylinder) -> list[Violation]:
    out: list[Violation] = []
    _check(c, U, out, reversibility_table(c))
    return out


def _check(c, U, out, rev):
    n, d, k = U.level, U.depth, U.dim
    for cell in (U.top, U.bot):
        if not c.has(k, cell):
            out.append(Violation("cells", f"{cell} is not a {k}-cell", (cell,)))
            return
    if not _same_hom(c, U.top, U.bot, k, d):
        out.append(Violation("hom", f"top and bottom at depth {d} lie in different homs", (U.top, U.bot)))
    if n == 0:
        p = U.principal
        if p is None or not c.has(d + 1, p):
            out.append(Violation("cells", f"principal {p} is not a {d + 1}-cell", (p,)))
            return
        if c.s(d + 1, p) != U.top or c.t(d + 1, p) != U.bot:
            out.append(Violation("boundary", f"principal {p} does not go from {U.top} to {U.bot}", (p,)))
        if not rev.is_reversible(d + 1, p):
            out.append(Violation("reversible", f"principal {p} is not reversible", (p,)))
        return
    ends = ((U.src_anchor, c.src_iter(U.top, k, d), c.src_iter(U.bot, k, d)),
            (U.tgt_anchor, c.tgt_iter(U.top, k, d), c.tgt_iter(U.bot, k, d)))
    for a, x, y in ends:
        if a is None or not c.has(d + 1, a):
            out.append(Violation("cells", f"anchor {a} is not a {d + 1}-cell", (a,)))
            return
        if c.s(d + 1, a) != x or c.t(d + 1, a) != y:
            out.append(Violation("boundary", f"anchor {a} does not go from {x} to {y}", (a,)))
            return
        if not rev.is_reversible(d + 1, a):
            out.append(Violation("reversible", f"anchor {a} is not reversible", (a,)))
    S = U.shifted
    if S is None or S.level != n - 1 or S.depth != d + 1:
        out.append(Violation("shape", f"shifted cylinder must have level {n - 1} and depth {d + 1}"))
        return
    try:
        top, bot = shifted_ends(c, U)
    except CompositionError as e:
        out.append(Violation("boundary", f"whiskers undefined: {e}"))
        return
    if S.top != top or S.bot != bot:
        out.append(Violation("whisker", f"shifted cylinder runs {S.top} ~> {S.bot}, expected {top} ~> {bot}",
                             (S.top, S.bot)))
    _check(c, S, out, rev)


# globular structure

def cyl_source(c: OmegaCat, W: Cylinder) -> Cylinder:
    return _boundary(c, W, c.s, True)


def cyl_target(c: OmegaCat, W: Cylinder) -> Cylinder:
    return _boundary(c, W, c.t, False)


def _boundary(c, W, side, is_source):
    if W.level == 0:
        raise CylinderError("a 0-cylinder has no boundary cylinders")
    k = W.dim
    top, bot = side(k, W.top), side(k, W.bot)
    if W.level == 1:
        return Cylinder(0, W.depth, top, bot, principal=W.src_anchor if is_source else W.tgt_anchor)
    return Cylinder(W.level - 1, W.depth, top, bot, src_anchor=W.src_anchor, tgt_anchor=W.tgt_anchor,
                    shifted=_boundary(c, W.shifted, side, is_source))


def cyl_source_iter(c: OmegaCat, W: Cylinder, k: int) -> Cylinder:
    """The ``k``-source of ``W``, a cylinder of level ``k``."""
    while W.level > k:
        W = cyl_source(c, W)
    return W


def cyl_target_iter(c: OmegaCat, W: Cylinder, k: int) -> Cylinder:
    while W.level > k:
        W = cyl_target(c, W)
    return W


# trivial cylinders and units

def cyl_trivial(c: OmegaCat, x: str, level: int, depth: int = 0) -> Cylinder:
    """The trivial cylinder on the ``(level+depth)``-cell ``x``."""
    k = level + depth
    if level == 0:
        return Cylinder(0, depth, x, x, principal=c.lift(x, k, k + 1))
    a = c.lift(c.src_iter(x, k, depth), depth, depth + 1)
    b = c.lift(c.tgt_iter(x, k, depth), depth, depth + 1)
    return Cylinder(level, depth, x, x, src_anchor=a, tgt_anchor=b,
                    shifted=cyl_trivial(c, x, level - 1, depth + 1))


def cyl_unit(c: OmegaCat, U: Cylinder) -> Cylinder:
    k = U.dim
    top, bot = c.lift(U.top, k, k + 1), c.lift(U.bot, k, k + 1)
    if U.level == 0:
        p = U.principal
        return Cylinder(1, U.depth, top, bot, src_anchor=p, tgt_anchor=p,
                        shifted=cyl_trivial(c, p, 0, U.depth + 1))
    return Cylinder(U.level + 1, U.depth, top, bot, src_anchor=U.src_anchor, tgt_anchor=U.tgt_anchor,
                    shifted=cyl_unit(c, U.shifted))


# cell-wise maps

def map_cells(U: Cylinder, fn: Callable[[int, str], str]) -> Cylinder:
    """Apply a dimension-aware cell map to every component."""
    k = U.dim
    if U.level == 0:
        return replace(U, top=fn(k, U.top), bot=fn(k, U.bot), principal=fn(U.depth + 1, U.principal))
    return replace(U, top=fn(k, U.top), bot=fn(k, U.bot),
                   src_anchor=fn(U.depth + 1, U.src_anchor), tgt_anchor=fn(U.depth + 1, U.tgt_anchor),
                   shifted=map_cells(U.shifted, fn))


def zip_cells(U: Cylinder, V: Cylinder, fn: Callable[[int, str, str], str]) -> Cylinder:
    """Combine two cylinders of the same shape component by component."""
    if (U.level, U.depth) != (V.level, V.depth):
        raise CylinderError("cylinders of different shape")
    k = U.dim
    if U.level == 0:
        return replace(U, top=fn(k, U.top, V.top), bot=fn(k, U.bot, V.bot),
                       principal=fn(U.depth + 1, U.principal, V.principal))
    return replace(U, top=fn(k, U.top, V.top), bot=fn(k, U.bot, V.bot),
                   src_anchor=fn(U.depth + 1, U.src_anchor, V.src_anchor),
                   tgt_anchor=fn(U.depth + 1, U.tgt_anchor, V.tgt_anchor),
                   shifted=zip_cells(U.shifted, V.shifted, fn))


def gamma_functor_image(f: OmegaFunctor, U: Cylinder) -> Cylinder:
    return map_cells(U, f)


def _horizontal(c: OmegaCat, d: int, U: Cylinder, V: Cylinder) -> Cylinder:
    """``U *_d V`` componentwise; both live at depth ``d+1``."""
    return zip_cells(U, V, lambda k, a, b: c.compose(k, d, a, b))


# concatenation and composition

def cyl_concat(c: OmegaCat, U: Cylinder, V: Cylinder) -> Cylinder:
    """``V . U`` for ``U: x ~> y`` and ``V: y ~> z``."""
    if (U.level, U.depth) != (V.level, V.depth):
        raise CylinderError("concatenation needs cylinders of the same level and depth")
    if U.bot != V.top:
        raise CylinderError(f"middle cells differ: {U.bot} vs {V.top}")
    d = U.depth
    if U.level == 0:
        return Cylinder(0, d, U.top, V.bot, principal=c.compose(d + 1, d, V.principal, U.principal))
    lo = c.compose(d + 1, d, V.src_anchor, U.src_anchor)
    hi = c.compose(d + 1, d, V.tgt_anchor, U.tgt_anchor)
    first = map_cells(U.shifted, lambda k, u: _whisker_left(c, V.tgt_anchor, u, k, d))
    second = map_cells(V.shifted, lambda k, u: _whisker_right(c, u, U.src_anchor, k, d))
    return Cylinder(U.level, d, U.top, V.bot, src_anchor=lo, tgt_anchor=hi,
                    shifted=cyl_concat(c, first, second))


def cyl_composable(c: OmegaCat, U: Cylinder, V: Cylinder, k: int) -> bool:
    return (U.level == V.level and U.depth == V.depth and k < U.level
            and cyl_target_iter(c, U, k) == cyl_source_iter(c, V, k))


def cyl_compose(c: OmegaCat, U: Cylinder, V: Cylinder, k: int) -> Cylinder:
    """``V *_k U``, defined when the ``k``-target of ``U`` is the ``k``-source of ``V``."""
    if not cyl_composable(c, U, V, k):
        raise CylinderError(f"cylinders are not {k}-composable")
    d, m = U.depth, U.dim
    top = c.compose(m, k + d, V.top, U.top)
    bot = c.compose(m, k + d, V.bot, U.bot)
    if k == 0:
        first = _horizontal(c, d, V.shifted, cyl_trivial(c, U.top, U.level - 1, d + 1))
        second = _horizontal(c, d, cyl_trivial(c, V.bot, V.level - 1, d + 1), U.shifted)
        return Cylinder(U.level, d, top, bot, src_anchor=U.src_anchor, tgt_anchor=V.tgt_anchor,
                        shifted=cyl_concat(c, first, second))
    return Cylinder(U.level, d, top, bot, src_anchor=U.src_anchor, tgt_anchor=U.tgt_anchor,
                    shifted=cyl_compose(c, U.shifted, V.shifted, k - 1))


def principal_of_composite(c: OmegaCat, U: Cylinder, V: Cylinder) -> str:
    """``(y' *_0 pi U) *_1 (pi V *_0 x)`` for 1-cylinders ``U: x ~> x'`` and ``V: y ~> y'``."""
    left = c.compose(2, 0, c.lift(V.bot, 1, 2), U.shifted.principal)
    right = c.compose(2, 0, V.shifted.principal, c.lift(U.top, 1, 2))
    return c.compose(2, 1, left, right)


# inverses in groupoids

def cyl_inverse(g: OmegaCat, W: Cylinder) -> Cylinder:
    """The ``*_{n-1}``-inverse of an ``n``-cylinder in a groupoid, ``n >= 1``."""
    as_groupoid(g)
    n, d, k = W.level, W.depth, W.dim
    if n == 0:
        raise CylinderError("0-cylinders have no inverse")
    top, bot = inverse(g, k, k - 1, W.top), inverse(g, k, k - 1, W.bot)
    if n > 1:
        return Cylinder(n, d, top, bot, src_anchor=W.src_anchor, tgt_anchor=W.tgt_anchor,
                        shifted=cyl_inverse(g, W.shifted))
    p = inverse(g, d + 2, d + 1, W.shifted.principal)
    p = g.compose(d + 2, d, g.lift(bot, d + 1, d + 2), p)
    p = g.compose(d + 2, d, p, g.lift(top, d + 1, d + 2))
    out = Cylinder(1, d, top, bot, src_anchor=W.tgt_anchor, tgt_anchor=W.src_anchor)
    sh_top, sh_bot = shifted_ends(g, out)
    return replace(out, shifted=Cylinder(0, d + 1, sh_top, sh_bot, principal=p))


# enumeration

def enumerate_cylinders(c: OmegaCat, level: int, depth: int = 0,
                        top: str | None = None, bot: str | None = None) -> Iterator[Cylinder]:
    """Every valid cylinder of the given level and depth, optionally with fixed ends."""
    rev = reversibility_table(c)
    yield from _enum(c, rev, level, depth, top, bot)


def _enum(c, rev, n, d, top, bot):
    k = n + d
    if n == 0:
        cands = c.cells_at(d + 1)
        if top is not None and bot is not None:
            cands = c.homset(d + 1, top, bot)
        for p in cands:
            if (top is None or c.s(d + 1, p) == top) and (bot is None or c.t(d + 1, p) == bot) \
                    and rev.is_reversible(d + 1, p):
                yield Cylinder(0, d, c.s(d + 1, p), c.t(d + 1, p), principal=p)
        return
    tops = [top] if top is not None else c.cells_at(k)
    bots = [bot] if bot is not None else c.cells_at(k)
    for x in tops:
        for y in bots:
            if not _same_hom(c, x, y, k, d):
                continue
            for a in c.homset(d + 1, c.src_iter(x, k, d), c.src_iter(y, k, d)):
                if not rev.is_reversible(d + 1, a):
                    continue
                for b in c.homset(d + 1, c.tgt_iter(x, k, d), c.tgt_iter(y, k, d)):
                    if not rev.is_reversible(d + 1, b):
                        continue
                    U = Cylinder(n, d, x, y, src_anchor=a, tgt_anchor=b)
                    st, sb = shifted_ends(c, U)
                    for S in _enum(c, rev, n - 1, d + 1, st, sb):
                        yield replace(U, shifted=S)


def _same_hom(c, x, y, k, d):
    """Whether the ``k``-cells ``x, y`` lie in one hom-category at depth ``d``."""
    return d == 0 or (c.src_iter(x, k, d - 1) == c.src_iter(y, k, d - 1)
                      and c.tgt_iter(x, k, d - 1) == c.tgt_iter(y, k, d - 1))


def brute_force_inverses(g: OmegaCat, W: Cylinder) -> list[Cylinder]:
    """All cylinders ``W'`` with ``W' *_{n-1} W`` and ``W *_{n-1} W'`` units."""
    n = W.level
    U, V = cyl_source(g, W), cyl_target(g, W)
    unit_u, unit_v = cyl_unit(g, U), cyl_unit(g, V)
    found = []
    for X in enumerate_cylinders(g, n, W.depth):
        if not (cyl_source(g, X) == V and cyl_target(g, X) == U):
            continue
        if cyl_compose(g, W, X, n - 1) == unit_u and cyl_compose(g, X, W, n - 1) == unit_v:
            found.append(X)
    return found


# immersions

@dataclass
class ImmersionWitness:
    """``f: C -> D`` with retraction ``g`` and a cylinder ``h(c): f g c ~> c`` for every cell."""

    f: OmegaFunctor
    g: OmegaFunctor
    h: dict[int, dict[str, Cylinder]]


@dataclass(frozen=True)
class ImmersionVerdict:
    holds: bool
    failure: dict | None = None

    def __bool__(self):
        return self.holds


def verify_immersion(w: ImmersionWitness) -> ImmersionVerdict:
    f, g, h = w.f, w.g, w.h
    C, D = f.dom, f.cod

    def fail(equation, **info):
        return ImmersionVerdict(False, {"equation": equation, **info})

    for name, F in (("f", f), ("g", g)):
        errs = validate_functor(F)
        if errs:
            return fail(f"{name} is a functor", violation=str(errs[0]))
    if g.dom is not D or g.cod is not C:
        return fail("g: D -> C")
    for k in range(C.N + 1):
        for u in C.cells_at(k):
            if g(k, f(k, u)) != u:
                return fail("g f = id", dimension=k, cell=u)
    for k in range(D.N + 1):
        for u in D.cells_at(k):
            U = h.get(k, {}).get(u)
            if U is None or U.level != k or U.depth != 0:
                return fail("h is total", dimension=k, cell=u)
            errs = validate_cylinder(D, U)
            if errs:
                return fail("h(c) is a cylinder", dimension=k, cell=u, violation=str(errs[0]))
            if U.top != f(k, g(k, u)):
                return fail("top h = f g", dimension=k, cell=u)
            if U.bot != u:
                return fail("bot h = id", dimension=k, cell=u)
    for k in range(C.N + 1):
        for u in C.cells_at(k):
            fu = f(k, u)
            if h[k][fu] != cyl_trivial(D, fu, k):
                return fail("h f = tau f", dimension=k, cell=u)
    bad = _h_functoriality(D, h)
    if bad:
        return fail("h is a functor", **bad)
    return ImmersionVerdict(True)


def _h_functoriality(D: OmegaCat, h) -> dict | None:
    N = D.N
    for k in range(1, N + 1):
        for u in D.cells_at(k):
            if cyl_source(D, h[k][u]) != h[k - 1][D.s(k, u)]:
                return {"law": "source", "cell": u}
            if cyl_target(D, h[k][u]) != h[k - 1][D.t(k, u)]:
                return {"law": "target", "cell": u}
    for k in range(N):
        for u in D.cells_at(k):
            if h[k + 1][D.lift(u, k, k + 1)] != cyl_unit(D, h[k][u]):
                return {"law": "identity", "cell": u}
    for i in range(1, N + 1):
        for j in range(i):
            for u, v in D.composable_pairs(i, j):
                if h[i][D.compose(i, j, u, v)] != cyl_compose(D, h[i][v], h[i][u], j):
                    return {"law": "composition", "cells": [u, v], "at": j}
    return None


def solve_homotopy(f: OmegaFunctor, g: OmegaFunctor, h0: dict[str, Cylinder]) -> dict | None:
    """Extend chosen 0-cylinders to a cell-indexed homotopy by search.

    Cells in the image of ``f`` get trivial cylinders; other cells get the
    first cylinder with the required ends and boundary cylinders.
    """
    D = f.cod
    image = [{f(k, u) for u in f.dom.cells_at(k)} for k in range(D.N + 1)]
    h = {0: dict(h0)}
    for k in range(1, D.N + 1):
        h[k] = {}
        for u in D.cells_at(k):
            if u in image[k]:
                h[k][u] = cyl_trivial(D, u, k)
                continue
            base = D.is_identity_of(k, u, k - 1)
            if base is not None:
                h[k][u] = cyl_unit(D, h[k - 1][base])
                continue
            src, tgt = h[k - 1][D.s(k, u)], h[k - 1][D.t(k, u)]
            for U in enumerate_cylinders(D, k, 0, top=f(k, g(k, u)), bot=u):
                if cyl_source(D, U) == src and cyl_target(D, U) == tgt:
                    h[k][u] = U
                    break
            else:
                return None
    return h
