"""Canonical JSON documents for categories, functors, crossed complexes and immersions.

Identity cells are never written.  A composition row is omitted when it is
forced by the unit laws (one factor an iterated identity of a ``j``-cell)
or by unit functoriality (both factors identities, ``j < i-1``); parsing
regenerates exactly those rows.  Emission sorts keys and cell lists, so
``emit(parse(text)) == text`` for canonical text.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .crossed import CrossedComplex, CrossedMorphism
from .cylinder import Cylinder, ImmersionWitness
from .globular import TruncatedGlobularSet
from .groups import FinGroup, FinGroupoid
from .omega_cat import ID, OmegaCat, OmegaFunctor, ident


class ParseError(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _load(src, base: Path | None):
    """A document given inline, as a path, or as JSON text."""
    if isinstance(src, (dict, list)):
        return src, base
    if isinstance(src, Path) or (isinstance(src, str) and not src.lstrip().startswith(("{", "["))):
        p = Path(src)
        if base is not None and not p.is_absolute():
            p = base / p
        try:
            text = p.read_text()
        except OSError as e:
            raise ParseError(f"cannot read {p}: {e}") from None
        return _json(text), p.parent
    return _json(src), base


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from None


def _need(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"missing key {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"{key!r} must be {kind.__name__ if isinstance(kind, type) else kind}")
    return v


# categories

def _derived(c: OmegaCat, i: int, j: int, u: str, v: str) -> str | None:
    if c.is_identity_of(i, v, j) is not None:
        return u
    if c.is_identity_of(i, u, j) is not None:
        return v
    if j < i - 1 and u.startswith(ID) and v.startswith(ID):
        w = c.try_compose(i - 1, j, u[len(ID):], v[len(ID):])
        return None if w is None else ident(w)
    return None


def category_to_doc(c: OmegaCat) -> dict:
    cells: list = [sorted(c.cells_at(0))]
    for k in range(1, c.N + 1):
        cells.append([{"name": u, "src": c.s(k, u), "tgt": c.t(k, u)}
                      for u in sorted(c.cells_at(k)) if c.is_identity_of(k, u, k - 1) is None])
    comps = {}
    for i in range(1, c.N + 1):
        for j in range(i):
            rows = [{"left": u, "right": v, "result": w}
                    for (u, v), w in sorted(c.comp[(i, j)].items()) if _derived(c, i, j, u, v) != w]
            comps[f"{i}*{j}"] = rows
    return {"dimension": c.N, "cells": cells, "compositions": comps}


def category_from_doc(doc: dict) -> OmegaCat:
    N = _need(doc, "dimension", int)
    raw = _need(doc, "cells", list)
    if N < 0 or len(raw) != N + 1:
        raise ParseError(f"'cells' must list dimensions 0..{N}")
    objs = raw[0]
    if not isinstance(objs, list) or not all(isinstance(x, str) for x in objs):
        raise ParseError("0-cells must be a list of names")
    names = [sorted(set(objs))]
    if len(names[0]) != len(objs):
        raise ParseError("duplicate 0-cells")
    src: list[dict] = []
    tgt: list[dict] = []
    for k in range(1, N + 1):
        if not isinstance(raw[k], list):
            raise ParseError(f"{k}-cells must be a list")
        s, t, seen = {}, {}, []
        for rec in raw[k]:
            if not isinstance(rec, dict) or not all(isinstance(rec.get(f), str) for f in ("name", "src", "tgt")):
                raise ParseError(f"{k}-cell records need string name, src and tgt")
            u = rec["name"]
            if u.startswith(ID):
                base = u[len(ID):]
                if base not in names[k - 1] or rec["src"] != base or rec["tgt"] != base:
                    raise ParseError(f"{u} uses the reserved identity prefix but is not the identity of {base}")
                continue
            if u in s:
                raise ParseError(f"duplicate {k}-cell {u}")
            s[u], t[u] = rec["src"], rec["tgt"]
            seen.append(u)
        for x in names[k - 1]:
            s[ident(x)] = t[ident(x)] = x
        names.append(sorted(seen + [ident(x) for x in names[k - 1]]))
        src.append(s)
        tgt.append(t)
    comp_doc = doc.get("compositions", {})
    if not isinstance(comp_doc, dict):
        raise ParseError("'compositions' must be an object")
    explicit: dict[tuple[int, int], dict] = {}
    for key, rows in comp_doc.items():
        try:
            i, j = (int(p) for p in key.split("*"))
        except ValueError:
            raise ParseError(f"bad composition key {key!r}") from None
        if not 0 <= j < i <= N or not isinstance(rows, list):
            raise ParseError(f"bad composition key {key!r}")
        table = explicit.setdefault((i, j), {})
        for r in rows:
            if not isinstance(r, dict) or not all(isinstance(r.get(f), str) for f in ("left", "right", "result")):
                raise ParseError(f"rows of {key!r} need string left, right and result")
            table[(r["left"], r["right"])] = r["result"]
    c = OmegaCat(TruncatedGlobularSet(tuple(tuple(cs) for cs in names), tuple(src), tuple(tgt)),
                 {k: dict(v) for k, v in explicit.items()})
    for i in range(1, N + 1):
        for j in range(i):
            table = c.comp[(i, j)]
            pairs = _pairs(c, i, j)
            for u, v in pairs:
                if (u, v) not in table:
                    w = _derived(c, i, j, u, v)
                    if w is not None:
                        table[(u, v)] = w
    c._cache.clear()
    return c


def _pairs(c: OmegaCat, i: int, j: int):
    try:
        return c.composable_pairs(i, j)
    except KeyError as e:
        raise ParseError(f"dangling boundary reference {e}") from None
    finally:
        c._cache.pop(("pairs", i, j), None)
        c._cache.pop(("bt", i, j), None)


def parse_category(src, base: Path | None = None) -> OmegaCat:
    doc, _ = _load(src, base)
    return category_from_doc(doc)


def emit_category(c: OmegaCat) -> str:
    return dumps(category_to_doc(c))


# functors

def functor_to_doc(f: OmegaFunctor, source=None, target=None) -> dict:
    maps = []
    for k in range(f.dom.N + 1):
        m = {}
        for u in sorted(f.dom.cells_at(k)):
            base = f.dom.is_identity_of(k, u, k - 1) if k else None
            if base is not None and f(k, u) == ident(f(k - 1, base)):
                continue
            m[u] = f(k, u)
        maps.append(m)
    return {"source": source if source is not None else category_to_doc(f.dom),
            "target": target if target is not None else category_to_doc(f.cod),
            "map": maps}


def _map_from_doc(raw, dom: OmegaCat, cod: OmegaCat) -> OmegaFunctor:
    if not isinstance(raw, list) or len(raw) != dom.N + 1 or not all(isinstance(m, dict) for m in raw):
        raise ParseError(f"'map' must hold one object per dimension 0..{dom.N}")
    maps = []
    for k in range(dom.N + 1):
        m = {u: v for u, v in raw[k].items() if dom.has(k, u)}
        extra = set(raw[k]) - set(m)
        if extra:
            raise ParseError(f"map mentions unknown {k}-cells {sorted(extra)}")
        for u in dom.cells_at(k):
            if u not in m and k:
                base = dom.is_identity_of(k, u, k - 1)
                if base is not None and base in maps[k - 1]:
                    m[u] = ident(maps[k - 1][base])
        maps.append(m)
    return OmegaFunctor(dom, cod, tuple(maps))


def functor_from_doc(doc: dict, base: Path | None = None) -> OmegaFunctor:
    dom = parse_category(_need(doc, "source"), base)
    cod = parse_category(_need(doc, "target"), base)
    return _map_from_doc(_need(doc, "map"), dom, cod)


def parse_functor(src, base: Path | None = None) -> OmegaFunctor:
    doc, base = _load(src, base)
    return functor_from_doc(doc, base)


def emit_functor(f: OmegaFunctor) -> str:
    return dumps(functor_to_doc(f))


# groups, groupoids and crossed complexes

def group_to_doc(G: FinGroup) -> dict:
    els = sorted(G.elements)
    return {"elements": els, "unit": G.unit, "table": [[G.mul(a, b) for b in els] for a in els]}


def group_from_doc(doc) -> FinGroup:
    els = _need(doc, "elements", list)
    rows = _need(doc, "table", list)
    if len(rows) != len(els) or any(not isinstance(r, list) or len(r) != len(els) for r in rows):
        raise ParseError("group table must be square over the element list")
    table = {(a, b): rows[p][q] for p, a in enumerate(els) for q, b in enumerate(els)}
    return FinGroup(tuple(els), table, _need(doc, "unit", str))


def groupoid_to_doc(B: FinGroupoid) -> dict:
    return {"objects": sorted(B.objects),
            "morphisms": [{"name": m, "src": s, "tgt": t} for m, (s, t) in sorted(B.morphisms.items())],
            "identities": dict(sorted(B.ident.items())),
            "composition": [{"left": g, "right": f, "result": h} for (g, f), h in sorted(B.comp.items())]}


def groupoid_from_doc(doc) -> FinGroupoid:
    try:
        morphisms = {r["name"]: (r["src"], r["tgt"]) for r in _need(doc, "morphisms", list)}
        comp = {(r["left"], r["right"]): r["result"] for r in _need(doc, "composition", list)}
    except (KeyError, TypeError):
        raise ParseError("groupoid records need name/src/tgt and left/right/result") from None
    return FinGroupoid(tuple(sorted(_need(doc, "objects", list))), morphisms, comp,
                       dict(_need(doc, "identities", dict)))


def _sorted_nested(d: dict) -> dict:
    return {str(k): {x: dict(sorted(m.items())) for x, m in sorted(v.items())} for k, v in sorted(d.items())}


def crossed_to_doc(c: CrossedComplex) -> dict:
    return {"dimension": c.dimension,
            "base": groupoid_to_doc(c.base),
            "groups": {str(n): {x: group_to_doc(G) for x, G in sorted(gs.items())}
                       for n, gs in sorted(c.groups.items())},
            "d": _sorted_nested(c.d),
            "action": _sorted_nested(c.action)}


def _int_keyed(doc, key) -> dict:
    raw = doc.get(key, {})
    if not isinstance(raw, dict):
        raise ParseError(f"{key!r} must be an object")
    try:
        return {int(k): v for k, v in raw.items()}
    except ValueError:
        raise ParseError(f"keys of {key!r} must be dimensions") from None


def crossed_from_doc(doc: dict) -> CrossedComplex:
    N = _need(doc, "dimension", int)
    groups = {n: {x: group_from_doc(g) for x, g in gs.items()} for n, gs in _int_keyed(doc, "groups").items()}
    d = {n: {x: dict(m) for x, m in v.items()} for n, v in _int_keyed(doc, "d").items()}
    action = {n: {u: dict(m) for u, m in v.items()} for n, v in _int_keyed(doc, "action").items()}
    return CrossedComplex(N, groupoid_from_doc(_need(doc, "base", dict)), groups, d, action)


def parse_crossed(src, base: Path | None = None) -> CrossedComplex:
    doc, _ = _load(src, base)
    return crossed_from_doc(doc)


def emit_crossed(c: CrossedComplex) -> str:
    return dumps(crossed_to_doc(c))


def cc_morphism_to_doc(f: CrossedMorphism) -> dict:
    return {"source": crossed_to_doc(f.dom), "target": crossed_to_doc(f.cod),
            "objects": dict(sorted(f.objects.items())), "morphisms": dict(sorted(f.morphisms.items())),
            "maps": _sorted_nested(f.maps)}


def parse_cc_morphism(src, base: Path | None = None) -> CrossedMorphism:
    doc, base = _load(src, base)
    dom = parse_crossed(_need(doc, "source"), base)
    cod = parse_crossed(_need(doc, "target"), base)
    maps = {n: {x: dict(m) for x, m in v.items()} for n, v in _int_keyed(doc, "maps").items()}
    return CrossedMorphism(dom, cod, dict(_need(doc, "objects", dict)),
                           dict(_need(doc, "morphisms", dict)), maps)


# immersion bundles

def immersion_to_doc(w: ImmersionWitness) -> dict:
    fd, gd = functor_to_doc(w.f), functor_to_doc(w.g)
    D = w.f.cod
    return {"source": fd["source"], "target": fd["target"], "f": fd["map"], "g": gd["map"],
            "h": [{u: w.h[k][u].to_record() for u in sorted(D.cells_at(k)) if u in w.h.get(k, {})}
                  for k in range(D.N + 1)]}


def parse_immersion(src, base: Path | None = None) -> ImmersionWitness:
    doc, base = _load(src, base)
    C = parse_category(_need(doc, "source"), base)
    D = parse_category(_need(doc, "target"), base)
    f = _map_from_doc(_need(doc, "f"), C, D)
    g = _map_from_doc(_need(doc, "g"), D, C)
    raw = _need(doc, "h", list)
    try:
        h = {k: {u: Cylinder.from_record(r) for u, r in m.items()} for k, m in enumerate(raw)}
    except (KeyError, TypeError):
        raise ParseError("cylinder records are malformed") from None
    return ImmersionWitness(f, g, h)


def emit_immersion(w: ImmersionWitness) -> str:
    return dumps(immersion_to_doc(w))


# dispatch by kind

EMITTERS = {"cat": emit_category, "functor": emit_functor, "cc": emit_crossed,
            "cc-morphism": lambda f: dumps(cc_morphism_to_doc(f)), "immersion": emit_immersion}
PARSERS = {"cat": parse_category, "functor": parse_functor, "cc": parse_crossed,
           "cc-morphism": parse_cc_morphism, "immersion": parse_immersion}
