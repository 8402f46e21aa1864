"""Strict omega-categories truncated at a finite dimension.

An ``OmegaCat`` stores cells in dimensions ``0..N``.  Every cell above ``N``
is an identity: the ``(N+1)``-cells are exactly ``id:u`` for ``N``-cells ``u``
and so on.  These cells are never stored but every accessor answers for them,
so algorithms quantifying over cells of dimension ``N+1`` see the identities
only.

Composition is written ``compose(i, j, u, v) = u *_j v`` and requires
``s_j(u) == t_j(v)``; for ``j = i-1`` the result goes from ``s(v)`` to ``t(u)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .globular import (
    DimensionError,
    TruncatedGlobularSet,
    Verdict,
    Violation,
    hom_globular_set,
    iterated_src,
    iterated_tgt,
    parallel,
    validate_globular,
)

ID = "id:"


class CompositionError(KeyError):
    pass


def ident(u: str) -> str:
    return ID + u


def iterated_ident(u: str, times: int) -> str:
    return ID * times + u


class OmegaCat:
    """A finite strict omega-category with all cells above ``N`` identities."""

    def __init__(self, carrier: TruncatedGlobularSet,
                 comp: dict[tuple[int, int], dict[tuple[str, str], str]] | None = None):
        self.carrier = carrier
        self.comp = {k: dict(v) for k, v in (comp or {}).items()}
        for i in range(1, carrier.dimension + 1):
            for j in range(i):
                self.comp.setdefault((i, j), {})
        self._cache: dict = {}

    @property
    def N(self) -> int:
        return self.carrier.dimension

    def __repr__(self):
        counts = "/".join(str(len(cs)) for cs in self.carrier.cells)
        return f"OmegaCat(N={self.N}, cells={counts})"

    # cells, including the identity layers above N

    def cells_at(self, k: int) -> tuple[str, ...]:
        if k < 0:
            return ()
        if k <= self.N:
            return self.carrier.cells[k]
        key = ("cells", k)
        if key not in self._cache:
            self._cache[key] = tuple(ident(u) for u in self.cells_at(k - 1))
        return self._cache[key]

    def has(self, k: int, u: str) -> bool:
        if k <= self.N:
            return self.carrier.has(k, u)
        return u.startswith(ID) and self.has(k - 1, u[len(ID):])

    def s(self, k: int, u: str) -> str:
        if k <= self.N:
            return self.carrier.s(k, u)
        return u[len(ID):]

    def t(self, k: int, u: str) -> str:
        if k <= self.N:
            return self.carrier.t(k, u)
        return u[len(ID):]

    def src_iter(self, u: str, i: int, j: int) -> str:
        return iterated_src(self, u, i, j)

    def tgt_iter(self, u: str, i: int, j: int) -> str:
        return iterated_tgt(self, u, i, j)

    def lift(self, u: str, k: int, m: int) -> str:
        """The iterated identity of the ``k``-cell ``u`` in dimension ``m``."""
        return iterated_ident(u, m - k)

    def is_identity_of(self, i: int, u: str, j: int) -> str | None:
        """If the ``i``-cell ``u`` is an iterated identity of a ``j``-cell, return it."""
        p = ID * (i - j)
        if u.startswith(p) and self.has(j, u[len(p):]):
            return u[len(p):]
        return None

    def composable(self, i: int, j: int, u: str, v: str) -> bool:
        return self.src_iter(u, i, j) == self.tgt_iter(v, i, j)

    def compose(self, i: int, j: int, u: str, v: str) -> str:
        if i <= self.N:
            try:
                return self.comp[(i, j)][(u, v)]
            except KeyError:
                raise CompositionError(f"{u} *_{j} {v} undefined in dimension {i}") from None
        a, b = u[len(ID):], v[len(ID):]
        if j == i - 1:
            if a != b:
                raise CompositionError(f"{u} *_{j} {v} undefined in dimension {i}")
            return u
        return ident(self.compose(i - 1, j, a, b))

    def try_compose(self, i, j, u, v):
        try:
            return self.compose(i, j, u, v)
        except CompositionError:
            return None

    def by_target(self, i: int, j: int) -> dict[str, list[str]]:
        key = ("bt", i, j)
        if key not in self._cache:
            idx: dict[str, list[str]] = {}
            for v in self.cells_at(i):
                idx.setdefault(self.tgt_iter(v, i, j), []).append(v)
            self._cache[key] = idx
        return self._cache[key]

    def hom_index(self, k: int) -> dict[tuple[str, str], list[str]]:
        """``k``-cells grouped by (source, target)."""
        key = ("hom", k)
        if key not in self._cache:
            idx: dict[tuple[str, str], list[str]] = {}
            for u in self.cells_at(k):
                idx.setdefault((self.s(k, u), self.t(k, u)), []).append(u)
            self._cache[key] = idx
        return self._cache[key]

    def homset(self, k: int, x: str, y: str) -> list[str]:
        """``k``-cells from ``x`` to ``y`` (``x, y`` of dimension ``k-1``)."""
        return self.hom_index(k).get((x, y), [])

    def composable_pairs(self, i: int, j: int) -> list[tuple[str, str]]:
        key = ("pairs", i, j)
        if key not in self._cache:
            bt = self.by_target(i, j)
            self._cache[key] = [(u, v) for u in self.cells_at(i)
                                for v in bt.get(self.src_iter(u, i, j), ())]
        return self._cache[key]

    def parallel_pairs(self, k: int) -> Iterable[tuple[str, str]]:
        if k == 0:
            return itertools.product(self.cells_at(0), repeat=2)
        return (p for cs in self.hom_index(k).values() for p in itertools.product(cs, repeat=2))

    def with_composite(self, i: int, j: int, pair: tuple[str, str], value: str) -> "OmegaCat":
        """A copy with one composition entry replaced."""
        comp = {k: dict(v) for k, v in self.comp.items()}
        comp[(i, j)][pair] = value
        return OmegaCat(self.carrier, comp)


def from_ops(N: int,
             cells: Sequence[Sequence[Hashable]],
             src: Callable[[int, Hashable], Hashable],
             tgt: Callable[[int, Hashable], Hashable],
             unit: Callable[[int, Hashable], Hashable],
             compose: Callable[[int, int, Hashable, Hashable], Hashable],
             label: Callable[[Hashable], str] = str):
    """Build an ``OmegaCat`` from structure maps on abstract cells.

    ``cells[k]`` must contain every ``k``-cell, identities included, and
    ``unit(k, c)`` returns the identity ``(k+1)``-cell of the ``k``-cell ``c``.
    Identity cells receive reserved names.  Returns the category and the
    per-dimension naming maps.
    """
    names: list[dict] = []
    for k in range(N + 1):
        ids = {}
        if k > 0:
            ids = {unit(k - 1, c): c for c in cells[k - 1]}
        nm = {}
        for c in cells[k]:
            nm[c] = ident(names[k - 1][ids[c]]) if c in ids else label(c)
        if len(set(nm.values())) != len(nm):
            raise ValueError(f"label collision in dimension {k}")
        names.append(nm)
    carrier = TruncatedGlobularSet(
        tuple(tuple(names[k][c] for c in cells[k]) for k in range(N + 1)),
        tuple({names[k + 1][c]: names[k][src(k + 1, c)] for c in cells[k + 1]} for k in range(N)),
        tuple({names[k + 1][c]: names[k][tgt(k + 1, c)] for c in cells[k + 1]} for k in range(N)),
    )

    def it(f, c, i, j):
        for k in range(i, j, -1):
            c = f(k, c)
        return c

    comp = {}
    for i in range(1, N + 1):
        for j in range(i):
            idx: dict = {}
            for v in cells[i]:
                idx.setdefault(it(tgt, v, i, j), []).append(v)
            table = {}
            for u in cells[i]:
                for v in idx.get(it(src, u, i, j), ()):
                    table[(names[i][u], names[i][v])] = names[i][compose(i, j, u, v)]
            comp[(i, j)] = table
    return OmegaCat(carrier, comp), names


def lift_truncation(c: OmegaCat, N: int) -> OmegaCat:
    """View ``c`` at a higher truncation level by storing identity cells."""
    if N < c.N:
        raise DimensionError("can only raise the truncation level")
    cells = [c.cells_at(k) for k in range(N + 1)]
    return from_ops(
        N, cells, c.s, c.t, lambda k, u: ident(u), c.compose,
        label=lambda u: u)[0]


# validation

def validate_category(c: OmegaCat) -> list[Violation]:
    out = validate_globular(c.carrier)
    if out:
        return out
    N = c.N
    for k in range(N):
        for u in c.cells_at(k):
            e = ident(u)
            if not c.has(k + 1, e):
                out.append(Violation("identity", f"{k}-cell {u} has no identity {e}", (u,)))
            elif c.s(k + 1, e) != u or c.t(k + 1, e) != u:
                out.append(Violation("identity", f"identity {e} has wrong boundary", (e,)))
    for k in range(1, N + 1):
        for u in c.cells_at(k):
            if u.startswith(ID) and not c.has(k - 1, u[len(ID):]):
                out.append(Violation("identity", f"reserved name {u} is not an identity", (u,)))
    if out:
        return out

    def get(i, j, u, v):
        w = c.try_compose(i, j, u, v)
        return w

    for i in range(1, N + 1):
        for j in range(i):
            table = c.comp[(i, j)]
            pairs = set(c.composable_pairs(i, j))
            for pair in pairs:
                if pair not in table:
                    out.append(Violation("totality", f"{pair[0]} *{i}_{j} {pair[1]} missing", pair))
                elif not c.has(i, table[pair]):
                    out.append(Violation("totality", f"{pair[0]} *{i}_{j} {pair[1]} is not an {i}-cell", pair))
            for pair in table:
                if pair not in pairs:
                    out.append(Violation("totality", f"entry for non-composable pair {pair} at *{i}_{j}", pair))
    if out:
        return out

    for i in range(1, N + 1):
        for j in range(i):
            for u, v in c.composable_pairs(i, j):
                w = c.compose(i, j, u, v)
                if j == i - 1:
                    es, et = c.s(i, v), c.t(i, u)
                else:
                    es = get(i - 1, j, c.s(i, u), c.s(i, v))
                    et = get(i - 1, j, c.t(i, u), c.t(i, v))
                if c.s(i, w) != es:
                    out.append(Violation("source-of-composite",
                                         f"s({u} *{i}_{j} {v}) = {c.s(i, w)}, expected {es}", (u, v)))
                if c.t(i, w) != et:
                    out.append(Violation("target-of-composite",
                                         f"t({u} *{i}_{j} {v}) = {c.t(i, w)}, expected {et}", (u, v)))
    if out:
        return out

    for i in range(1, N + 1):
        for j in range(i):
            bt = c.by_target(i, j)
            for u, v in c.composable_pairs(i, j):
                uv = c.compose(i, j, u, v)
                for w in bt.get(c.src_iter(v, i, j), ()):
                    if c.compose(i, j, uv, w) != c.compose(i, j, u, c.compose(i, j, v, w)):
                        out.append(Violation("associativity",
                                             f"({u} *{i}_{j} {v}) *{i}_{j} {w} != {u} *{i}_{j} ({v} *{i}_{j} {w})",
                                             (u, v, w)))
            for u in c.cells_at(i):
                right = c.lift(c.src_iter(u, i, j), j, i)
                left = c.lift(c.tgt_iter(u, i, j), j, i)
                if c.compose(i, j, u, right) != u or c.compose(i, j, left, u) != u:
                    out.append(Violation("units", f"identities in dimension {j} are not neutral for {u} at *{i}_{j}", (u,)))
            if i < N:
                for u, v in c.composable_pairs(i, j):
                    if ident(c.compose(i, j, u, v)) != c.compose(i + 1, j, ident(u), ident(v)):
                        out.append(Violation("unit-functoriality",
                                             f"id({u} *_{j} {v}) != id({u}) *_{j} id({v})", (u, v)))
            for k in range(j):
                out.extend(_exchange(c, i, j, k))
    return out


def _exchange(c: OmegaCat, i: int, j: int, k: int) -> list[Violation]:
    out = []
    pairs = c.composable_pairs(i, j)
    by_tk: dict[str, list[tuple[str, str]]] = {}
    for v, vp in pairs:
        by_tk.setdefault(c.tgt_iter(v, i, k), []).append((v, vp))
    for u, up in pairs:
        uu = c.compose(i, j, u, up)
        for v, vp in by_tk.get(c.src_iter(up, i, k), ()):
            lhs = c.compose(i, k, uu, c.compose(i, j, v, vp))
            rhs = c.compose(i, j, c.compose(i, k, u, v), c.compose(i, k, up, vp))
            if lhs != rhs:
                out.append(Violation("exchange",
                                     f"exchange fails for ({u},{up},{v},{vp}) at *_{j}, *_{k}",
                                     (u, up, v, vp)))
    return out


@dataclass(eq=False)
class OmegaFunctor:
    dom: OmegaCat
    cod: OmegaCat
    maps: tuple[dict[str, str], ...]

    def __post_init__(self):
        self.maps = tuple(dict(m) for m in self.maps)

    def __call__(self, k: int, u: str) -> str:
        if k <= self.dom.N:
            return self.maps[k][u]
        return ident(self(k - 1, u[len(ID):]))

    def __repr__(self):
        return f"OmegaFunctor({self.dom!r} -> {self.cod!r})"


def functor_from_function(dom: OmegaCat, cod: OmegaCat, fn: Callable[[int, str], str]) -> OmegaFunctor:
    return OmegaFunctor(dom, cod, tuple({u: fn(k, u) for u in dom.cells_at(k)} for k in range(dom.N + 1)))


def identity_functor(c: OmegaCat) -> OmegaFunctor:
    return functor_from_function(c, c, lambda k, u: u)


def compose_functors(g: OmegaFunctor, f: OmegaFunctor) -> OmegaFunctor:
    """``g`` after ``f``."""
    return functor_from_function(f.dom, g.cod, lambda k, u: g(k, f(k, u)))


def validate_functor(f: OmegaFunctor) -> list[Violation]:
    C, D = f.dom, f.cod
    if C.N != D.N:
        return [Violation("dimension", f"functor between truncation levels {C.N} and {D.N}")]
    out = []
    for k in range(C.N + 1):
        m = f.maps[k] if k < len(f.maps) else {}
        for u in C.cells_at(k):
            if u not in m:
                out.append(Violation("totality", f"{k}-cell {u} has no image", (u,)))
            elif not D.has(k, m[u]):
                out.append(Violation("totality", f"image of {k}-cell {u} is not a {k}-cell", (u,)))
    if out:
        return out
    for k in range(1, C.N + 1):
        for u in C.cells_at(k):
            if f(k - 1, C.s(k, u)) != D.s(k, f(k, u)):
                out.append(Violation("source", f"f(s({u})) != s(f({u}))", (u,)))
            if f(k - 1, C.t(k, u)) != D.t(k, f(k, u)):
                out.append(Violation("target", f"f(t({u})) != t(f({u}))", (u,)))
    for k in range(C.N):
        for u in C.cells_at(k):
            if f(k + 1, ident(u)) != ident(f(k, u)):
                out.append(Violation("identity", f"f(id {u}) != id f({u})", (u,)))
    if out:
        return out
    for i in range(1, C.N + 1):
        for j in range(i):
            for u, v in C.composable_pairs(i, j):
                w = D.try_compose(i, j, f(i, u), f(i, v))
                if w is None or f(i, C.compose(i, j, u, v)) != w:
                    out.append(Violation("composition", f"f({u} *{i}_{j} {v}) != f({u}) *{i}_{j} f({v})", (u, v)))
    return out


def hom_category(c: OmegaCat, u: str, v: str, n: int, truncated: bool = False) -> OmegaCat:
    """The omega-category of cells from the ``n``-cell ``u`` to the ``n``-cell ``v``.

    With ``truncated=True`` homs between cells of dimension ``n >= N`` are
    allowed and computed from the identity layers: a single object ``id:u``
    when ``u == v`` and nothing otherwise.
    """
    if n >= c.N:
        if not truncated:
            raise DimensionError(f"hom between {n}-cells needs n < {c.N}")
        if not parallel(c, n, u, v):
            raise DimensionError(f"{u} and {v} are not parallel")
        objs = (ident(u),) if u == v else ()
        return OmegaCat(TruncatedGlobularSet((objs,)))
    carrier = hom_globular_set(c.carrier, u, v, n)
    comp = {}
    for i in range(1, carrier.dimension + 1):
        cells = set(carrier.cells[i])
        for j in range(i):
            table = c.comp[(i + n + 1, j + n + 1)]
            comp[(i, j)] = {p: w for p, w in table.items() if p[0] in cells and p[1] in cells}
    return OmegaCat(carrier, comp)


# globes

def _globe_cells(n: int, with_top: bool):
    gens = [[] for _ in range(n + 1)]
    for k in range(n):
        gens[k] = [f"e{k}-", f"e{k}+"]
    if with_top:
        gens[n] = [f"e{n}"]
    return gens


def _gen_boundary(g: str, sign: str) -> str:
    k = int(g[1:].rstrip("+-"))
    return f"e{k - 1}{sign}"


def _free_on_globe(n: int, N: int, with_top: bool):
    gens = _globe_cells(n, with_top)
    # abstract cell (g, k): the k-dimensional iterated identity of generator g
    dim = {g: d for d, gs in enumerate(gens) for g in gs}
    cells = []
    for k in range(N + 1):
        cells.append([(g, k) for d, gs in enumerate(gens[: k + 1]) for g in gs])

    def src(k, c):
        g, lvl = c
        return (g, lvl - 1) if dim[g] < lvl else (_gen_boundary(g, "-"), lvl - 1)

    def tgt(k, c):
        g, lvl = c
        return (g, lvl - 1) if dim[g] < lvl else (_gen_boundary(g, "+"), lvl - 1)

    def compose(i, j, u, v):
        if dim[v[0]] <= j:
            return u
        if dim[u[0]] <= j:
            return v
        raise CompositionError("globe generators never compose")

    return from_ops(N, cells, src, tgt, lambda k, c: (c[0], c[1] + 1), compose,
                    label=lambda c: c[0])[0]


def globe(n: int, N: int) -> OmegaCat:
    """The free omega-category on one ``n``-cell ``e{n}``, truncated at ``N``."""
    if n < 0 or N < n:
        raise DimensionError(f"globe({n}) needs truncation level >= {n}")
    return _free_on_globe(n, N, True)


def boundary_globe(n: int, N: int) -> OmegaCat:
    if n < 0 or N < n - 1:
        raise DimensionError(f"boundary_globe({n}) needs truncation level >= {n - 1}")
    if n == 0:
        return OmegaCat(TruncatedGlobularSet(tuple(() for _ in range(N + 1))))
    return _free_on_globe(n, N, False)


def globe_inclusion(n: int, N: int) -> OmegaFunctor:
    return functor_from_function(boundary_globe(n, N), globe(n, N), lambda k, u: u)


# reversibility and omega-equivalence

class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self) -> dict:
        return {x: self.find(x) for x in self.parent}


@dataclass
class ReversibilityTable:
    N: int
    reversible: dict[int, frozenset[str]]      # k -> reversible k-cells, 1 <= k <= N
    classes: dict[int, dict[str, str]]          # k -> cell -> class representative

    def is_reversible(self, k: int, u: str) -> bool:
        return k > self.N or u in self.reversible[k]

    def equivalent(self, k: int, a: str, b: str) -> bool:
        if k > self.N:
            return a == b
        return self.classes[k][a] == self.classes[k][b]


def reversibility_table(c: OmegaCat) -> ReversibilityTable:
    """Reversible cells and omega-equivalence, computed from the top dimension down."""
    if "rev" in c._cache:
        return c._cache["rev"]
    N = c.N
    classes = {N: {u: u for u in c.cells_at(N)}}
    reversible: dict[int, frozenset[str]] = {}
    for k in range(N, 0, -1):
        eq = classes[k]
        rev = set()
        for u in c.cells_at(k):
            x, y = c.s(k, u), c.t(k, u)
            for w in c.homset(k, y, x):
                wu, uw = c.try_compose(k, k - 1, w, u), c.try_compose(k, k - 1, u, w)
                if wu is None or uw is None:
                    continue
                if eq.get(wu) == eq.get(ident(x)) and eq.get(uw) == eq.get(ident(y)):
                    rev.add(u)
                    break
        reversible[k] = frozenset(rev)
        uf = _UnionFind(c.cells_at(k - 1))
        for u in rev:
            uf.union(c.s(k, u), c.t(k, u))
        classes[k - 1] = uf.classes()
    table = ReversibilityTable(N, reversible, classes)
    c._cache["rev"] = table
    return table


def is_folk_weak_equivalence(f: OmegaFunctor) -> Verdict:
    """Membership in the folk class of weak equivalences, decided exhaustively."""
    errs = validate_functor(f)
    if errs:
        raise ValueError(f"invalid functor: {errs[0]}")
    C, D = f.dom, f.cod
    rev = reversibility_table(D)
    images = [f(0, x) for x in C.cells_at(0)]
    for y in D.cells_at(0):
        if not any(rev.equivalent(0, fx, y) for fx in images):
            return Verdict(False, {"condition": "objects", "object": y}, "folk")
    for n in range(C.N + 1):
        for x, xp in C.parallel_pairs(n):
            lifts = [f(n + 1, u) for u in C.homset(n + 1, x, xp)]
            for v in D.homset(n + 1, f(n, x), f(n, xp)):
                if not any(rev.equivalent(n + 1, fu, v) for fu in lifts):
                    return Verdict(False, {"condition": "cells", "dimension": n + 1,
                                           "pair": [x, xp], "cell": v}, "folk")
    return Verdict(True, None, "folk")


# inverses, and rebuilding one kind of inverse from another

def find_inverse(c: OmegaCat, i: int, j: int, u: str, within=None) -> str | None:
    """The ``*_j``-inverse of the ``i``-cell ``u``, found by exhaustive search."""
    if i > c.N:
        a = u[len(ID):]
        if j == i - 1:
            return u
        w = find_inverse(c, i - 1, j, a)
        return None if w is None else ident(w)
    x, y = c.src_iter(u, i, j), c.tgt_iter(u, i, j)
    one_x, one_y = c.lift(x, j, i), c.lift(y, j, i)
    for v in c.by_target(i, j).get(x, ()):
        if within is not None and v not in within:
            continue
        if c.src_iter(v, i, j) != y:
            continue
        if c.try_compose(i, j, u, v) == one_y and c.try_compose(i, j, v, u) == one_x:
            return v
    return None


def _required_inverse(c, i, j, u):
    w = find_inverse(c, i, j, u)
    if w is None:
        raise ValueError(f"{i}-cell {u} has no *_{j}-inverse")
    return w


def horizontal_inverse_from_vertical(c: OmegaCat, a: str, vertical_inverse: str,
                                     i: int = 2, k: int = 0) -> str:
    """``(w_k v) *_k a^{-1} *_k (w_k u)`` for an ``i``-cell ``a: u -> v``.

    Gives the ``*_k``-inverse of ``a`` from its ``*_{i-1}``-inverse when the
    boundaries ``u`` and ``v`` are ``*_k``-invertible.
    """
    j = i - 1
    u, v = c.s(i, a), c.t(i, a)
    ub, vb = _required_inverse(c, j, k, u), _required_inverse(c, j, k, v)
    h = c.compose(i, k, c.lift(vb, j, i), vertical_inverse)
    return c.compose(i, k, h, c.lift(ub, j, i))


def vertical_inverse_from_horizontal(c: OmegaCat, a: str, horizontal_inverse: str,
                                     i: int = 2, k: int = 0) -> str:
    """``v *_k a^* *_k u`` for an ``i``-cell ``a: u -> v`` with ``*_k``-inverse ``a^*``."""
    j = i - 1
    u, v = c.s(i, a), c.t(i, a)
    h = c.compose(i, k, c.lift(v, j, i), horizontal_inverse)
    return c.compose(i, k, h, c.lift(u, j, i))


def maximal_subgroupoid(c: OmegaCat) -> OmegaCat:
    """The largest sub-omega-category in which every cell is strictly invertible."""
    keep = [set(c.cells_at(k)) for k in range(c.N + 1)]
    changed = True
    while changed:
        changed = False
        for i in range(1, c.N + 1):
            for u in sorted(keep[i]):
                ok = c.s(i, u) in keep[i - 1] and c.t(i, u) in keep[i - 1]
                if ok:
                    ok = find_inverse(c, i, i - 1, u, within=keep[i]) is not None
                if not ok:
                    keep[i].discard(u)
                    changed = True
    cells = tuple(tuple(u for u in c.cells_at(k) if u in keep[k]) for k in range(c.N + 1))
    carrier = TruncatedGlobularSet(
        cells,
        tuple({u: c.carrier.src[k][u] for u in cells[k + 1]} for k in range(c.N)),
        tuple({u: c.carrier.tgt[k][u] for u in cells[k + 1]} for k in range(c.N)),
    )
    comp = {}
    for (i, j), table in c.comp.items():
        comp[(i, j)] = {p: w for p, w in table.items() if p[0] in keep[i] and p[1] in keep[i]}
        assert all(w in keep[i] for w in comp[(i, j)].values()), "composite left the subgroupoid"
    return OmegaCat(carrier, comp)


def is_subcategory(a: OmegaCat, b: OmegaCat) -> bool:
    """Whether ``a`` is a sub-omega-category of ``b`` (same names, same structure)."""
    if a.N != b.N:
        return False
    for k in range(a.N + 1):
        for u in a.cells_at(k):
            if not b.has(k, u):
                return False
            if k and (a.s(k, u) != b.s(k, u) or a.t(k, u) != b.t(k, u)):
                return False
    return all(b.comp[key].get(p) == w for key, t in a.comp.items() for p, w in t.items())
