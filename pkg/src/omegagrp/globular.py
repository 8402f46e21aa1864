"""Finite truncated globular sets."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One failed condition found by a validator."""

    rule: str
    message: str
    cells: tuple = ()

    def __str__(self):
        return f"[{self.rule}] {self.message}"


@dataclass(frozen=True)
class Verdict:
    """A decision together with a witness explaining a negative answer."""

    holds: bool
    witness: dict | None = None
    method: str = ""

    def __bool__(self):
        return self.holds


class DimensionError(ValueError):
    pass


@dataclass(eq=False)
class TruncatedGlobularSet:
    """Cells in dimensions ``0..N`` with source and target maps.

    ``src[k]`` and ``tgt[k]`` send ``(k+1)``-cells to ``k``-cells.
    """

    cells: tuple[tuple[str, ...], ...]
    src: tuple[dict[str, str], ...] = ()
    tgt: tuple[dict[str, str], ...] = ()
    _sets: tuple[frozenset, ...] = field(init=False, repr=False)

    def __post_init__(self):
        self.cells = tuple(tuple(cs) for cs in self.cells)
        n = len(self.cells) - 1
        if not self.src:
            self.src = tuple({} for _ in range(n))
        if not self.tgt:
            self.tgt = tuple({} for _ in range(n))
        self.src = tuple(dict(m) for m in self.src)
        self.tgt = tuple(dict(m) for m in self.tgt)
        self._sets = tuple(frozenset(cs) for cs in self.cells)

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    def has(self, k: int, u: str) -> bool:
        return 0 <= k <= self.dimension and u in self._sets[k]

    def s(self, k: int, u: str) -> str:
        """Immediate source of the ``k``-cell ``u``."""
        return self.src[k - 1][u]

    def t(self, k: int, u: str) -> str:
        return self.tgt[k - 1][u]


def validate_globular(g: TruncatedGlobularSet) -> list[Violation]:
    out = []
    for k, cs in enumerate(g.cells):
        if len(set(cs)) != len(cs):
            dup = sorted({c for c in cs if cs.count(c) > 1})
            out.append(Violation("distinct-cells", f"duplicate {k}-cells {dup}", tuple(dup)))
    for k in range(g.dimension):
        for u in g.cells[k + 1]:
            for name, m in (("source", g.src[k]), ("target", g.tgt[k])):
                if u not in m:
                    out.append(Violation("boundary", f"{k + 1}-cell {u} has no {name}", (u,)))
                elif m[u] not in g._sets[k]:
                    out.append(Violation("boundary", f"{name} of {k + 1}-cell {u} is not a {k}-cell", (u,)))
    if out:
        return out
    for k in range(g.dimension - 1):
        for a in g.cells[k + 2]:
            sa, ta = g.src[k + 1][a], g.tgt[k + 1][a]
            if g.src[k][sa] != g.src[k][ta]:
                out.append(Violation(
                    "globular", f"s{k}s{k + 1}({a}) != s{k}t{k + 1}({a})", (a,)))
            if g.tgt[k][sa] != g.tgt[k][ta]:
                out.append(Violation(
                    "globular", f"t{k}s{k + 1}({a}) != t{k}t{k + 1}({a})", (a,)))
    return out


def iterated_src(g, u: str, i: int, j: int) -> str:
    """``s_j ... s_{i-1}(u)`` for an ``i``-cell ``u``."""
    if not 0 <= j <= i:
        raise DimensionError(f"cannot take the {j}-source of an {i}-cell")
    for k in range(i, j, -1):
        u = g.s(k, u)
    return u


def iterated_tgt(g, u: str, i: int, j: int) -> str:
    if not 0 <= j <= i:
        raise DimensionError(f"cannot take the {j}-target of an {i}-cell")
    for k in range(i, j, -1):
        u = g.t(k, u)
    return u


def parallel(g, k: int, u: str, v: str) -> bool:
    return k == 0 or (g.s(k, u) == g.s(k, v) and g.t(k, u) == g.t(k, v))


def hom_globular_set(g: TruncatedGlobularSet, u: str, v: str, n: int) -> TruncatedGlobularSet:
    """The globular set of cells from the ``n``-cell ``u`` to the ``n``-cell ``v``."""
    N = g.dimension
    if not n < N:
        raise DimensionError(f"hom between {n}-cells needs n < {N}")
    if not parallel(g, n, u, v):
        raise DimensionError(f"{u} and {v} are not parallel")
    cells = []
    for k in range(N - n):
        d = n + k + 1
        cells.append(tuple(a for a in g.cells[d]
                           if iterated_src(g, a, d, n) == u and iterated_tgt(g, a, d, n) == v))
    keep = [set(cs) for cs in cells]
    src = tuple({a: g.src[n + k + 1][a] for a in keep[k + 1]} for k in range(len(cells) - 1))
    tgt = tuple({a: g.tgt[n + k + 1][a] for a in keep[k + 1]} for k in range(len(cells) - 1))
    return TruncatedGlobularSet(tuple(cells), src, tgt)


class Disagreement(RuntimeError):
    """Two routes that must agree gave different answers."""
