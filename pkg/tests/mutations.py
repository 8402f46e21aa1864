"""Single-table mutations of valid categories, for validator tests."""

from __future__ import annotations

import random

from omegagrp.globular import TruncatedGlobularSet
from omegagrp.omega_cat import OmegaCat


def _with_boundary(c: OmegaCat, side: str, k: int, u: str, value: str) -> OmegaCat:
    src = [dict(m) for m in c.carrier.src]
    tgt = [dict(m) for m in c.carrier.tgt]
    (src if side == "src" else tgt)[k - 1][u] = value
    return OmegaCat(TruncatedGlobularSet(c.carrier.cells, tuple(src), tuple(tgt)), c.comp)


def _without_entry(c: OmegaCat, key, pair) -> OmegaCat:
    comp = {k: dict(v) for k, v in c.comp.items()}
    del comp[key][pair]
    return OmegaCat(c.carrier, comp)


def mutations(c: OmegaCat, count: int, seed: int = 0):
    """Yield ``(description, mutant)``, each differing from ``c`` in one table entry."""
    rng = random.Random(seed)
    entries = [(key, pair) for key, table in sorted(c.comp.items()) for pair in sorted(table)]
    cells = [(k, u) for k in range(1, c.N + 1) for u in c.cells_at(k)]
    seen = set()
    attempts = 0
    while len(seen) < count and attempts < 50 * count:
        attempts += 1
        kind = rng.choice(["compose", "compose", "delete", "boundary"])
        if kind in ("compose", "delete") and entries:
            key, pair = rng.choice(entries)
            if kind == "delete":
                tag = ("delete", key, pair)
                mutant = _without_entry(c, key, pair)
            else:
                old = c.comp[key][pair]
                others = [w for w in c.cells_at(key[0]) if w != old]
                if not others:
                    continue
                new = rng.choice(others)
                tag = ("compose", key, pair, new)
                mutant = c.with_composite(key[0], key[1], pair, new)
        elif kind == "boundary" and cells:
            k, u = rng.choice(cells)
            side = rng.choice(["src", "tgt"])
            old = c.s(k, u) if side == "src" else c.t(k, u)
            others = [w for w in c.cells_at(k - 1) if w != old]
            if not others:
                continue
            new = rng.choice(others)
            tag = ("boundary", side, k, u, new)
            mutant = _with_boundary(c, side, k, u, new)
        else:
            continue
        if tag in seen:
            continue
        seen.add(tag)
        yield " ".join(map(str, tag)), mutant
