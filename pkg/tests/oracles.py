"""Independent reference computations used to check the library.

Everything here is deliberately naive: permutations of group elements,
cosets built as frozensets, compositions recomputed from scratch.
"""

from __future__ import annotations

import itertools


def brute_isomorphic(G, H) -> bool:
    """Try every bijection; only for small groups."""
    if len(G) != len(H):
        return False
    gs, hs = list(G.elements), list(H.elements)
    for perm in itertools.permutations(hs):
        phi = dict(zip(gs, perm))
        if phi[G.unit] != H.unit:
            continue
        if all(phi[G.mul(a, b)] == H.mul(phi[a], phi[b]) for a in gs for b in gs):
            return True
    return False


def perm_compose(p: str, q: str) -> str:
    """(p after q) for permutations written as image strings."""
    return "".join(p[int(q[i])] for i in range(len(q)))


def cosets(G, sub) -> set[frozenset]:
    return {frozenset(G.mul(g, h) for h in sub) for g in G.elements}


def crossed_module_homotopy(cm) -> tuple[int, int, bool, bool]:
    """(|coker d|, |ker d|, coker abelian, ker abelian) straight from the data."""
    G, H, d = cm.G, cm.H, cm.boundary
    im = {d[h] for h in H.elements}
    ker = [h for h in H.elements if d[h] == G.unit]
    cs = cosets(G, im)
    rep = {g: frozenset(G.mul(g, h) for h in im) for g in G.elements}
    coker_ab = all(rep[G.mul(a, b)] == rep[G.mul(b, a)] for a in G.elements for b in G.elements)
    ker_ab = all(H.mul(a, b) == H.mul(b, a) for a in ker for b in ker)
    return len(cs), len(ker), coker_ab, ker_ab


def components(objects, arrows) -> set[frozenset]:
    """Connected components by repeated closure, no union-find."""
    comp = {x: {x} for x in objects}
    changed = True
    while changed:
        changed = False
        for s, t in arrows:
            merged = comp[s] | comp[t]
            for y in merged:
                if comp[y] != merged:
                    comp[y] = merged
                    changed = True
    return {frozenset(c) for c in comp.values()}


def naive_category_ok(c) -> bool:
    """Strict omega-category axioms checked over all tuples of stored cells.

    No composable-pair indices are used; a missing table entry for a
    composable pair counts as failure.  Only practical for tiny inputs.
    """
    N = c.N
    cells = [list(c.carrier.cells[k]) for k in range(N + 1)]
    S = lambda k, u: c.carrier.src[k - 1][u]
    T = lambda k, u: c.carrier.tgt[k - 1][u]
    try:
        for k in range(2, N + 1):
            for a in cells[k]:
                if S(k - 1, S(k, a)) != S(k - 1, T(k, a)) or T(k - 1, S(k, a)) != T(k - 1, T(k, a)):
                    return False
    except KeyError:
        return False

    def st(u, i, j, f):
        for k in range(i, j, -1):
            u = f(k, u)
        return u

    def comp(i, j, u, v):
        if st(u, i, j, S) != st(v, i, j, T):
            return None
        w = c.comp.get((i, j), {}).get((u, v))
        if w is None or w not in cells[i]:
            raise ValueError
        return w

    def unit(u, k, i):
        for _ in range(i - k):
            u = "id:" + u
        return u

    try:
        for k in range(N):
            for u in cells[k]:
                e = unit(u, k, k + 1)
                if e not in cells[k + 1] or S(k + 1, e) != u or T(k + 1, e) != u:
                    return False
        for i in range(1, N + 1):
            for j in range(i):
                for u in cells[i]:
                    if comp(i, j, u, unit(st(u, i, j, S), j, i)) != u:
                        return False
                    if comp(i, j, unit(st(u, i, j, T), j, i), u) != u:
                        return False
                    for v in cells[i]:
                        uv = comp(i, j, u, v)
                        if uv is None:
                            continue
                        if j == i - 1:
                            if S(i, uv) != S(i, v) or T(i, uv) != T(i, u):
                                return False
                        else:
                            if S(i, uv) != comp(i - 1, j, S(i, u), S(i, v)):
                                return False
                            if T(i, uv) != comp(i - 1, j, T(i, u), T(i, v)):
                                return False
                        if i < N and comp(i + 1, j, unit(u, i, i + 1), unit(v, i, i + 1)) != unit(uv, i, i + 1):
                            return False
                        for w in cells[i]:
                            vw = comp(i, j, v, w)
                            if vw is not None and comp(i, j, uv, w) != comp(i, j, u, vw):
                                return False
                        for k in range(j):
                            for up in cells[i]:
                                for vp in cells[i]:
                                    a, b = comp(i, j, u, up), comp(i, j, v, vp)
                                    if a is None or b is None:
                                        continue
                                    x, y = comp(i, k, u, v), comp(i, k, up, vp)
                                    if x is None or y is None:
                                        continue
                                    if comp(i, k, a, b) != comp(i, j, x, y):
                                        return False
        for (i, j), table in c.comp.items():
            for (u, v) in table:
                if u not in cells[i] or v not in cells[i] or st(u, i, j, S) != st(v, i, j, T):
                    return False
    except (ValueError, KeyError):
        return False
    return True
