"""Finite groups and finite groupoids given by explicit tables.

Elements are strings.  Products follow the convention ``mul(a, b) = a * b``
and for groupoids ``comp(g, f)`` is "g after f", matching the orientation
used for composition in strict omega-categories.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

# exact isomorphism search is attempted up to this order
EXACT_ISO_LIMIT = 64


class GroupError(ValueError):
    pass


@dataclass(eq=False)
class FinGroup:
    elements: tuple[str, ...]
    table: dict[tuple[str, str], str]
    unit: str
    inverse: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.elements = tuple(self.elements)
        if not self.inverse:
            self.inverse = {}
            for a in self.elements:
                for b in self.elements:
                    if self.table.get((a, b)) == self.unit:
                        self.inverse[a] = b
                        break

    # construction helpers

    @classmethod
    def from_function(cls, elements: Iterable[str], mul, unit: str) -> "FinGroup":
        elements = tuple(elements)
        table = {(a, b): mul(a, b) for a in elements for b in elements}
        return cls(elements, table, unit)

    @classmethod
    def trivial(cls, unit: str = "1") -> "FinGroup":
        return cls((unit,), {(unit, unit): unit}, unit)

    @classmethod
    def cyclic(cls, n: int) -> "FinGroup":
        names = [str(k) for k in range(n)]
        return cls.from_function(names, lambda a, b: str((int(a) + int(b)) % n), "0")

    # basic queries

    def mul(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def inv(self, a: str) -> str:
        return self.inverse[a]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in self.table_index

    @property
    def table_index(self) -> dict[str, int]:
        try:
            return self._index
        except AttributeError:
            self._index = {a: k for k, a in enumerate(self.elements)}
            return self._index

    def violations(self) -> list[str]:
        """Group axioms that fail, as human-readable strings."""
        out = []
        els = self.elements
        if len(set(els)) != len(els):
            out.append("duplicate element names")
        if self.unit not in self.table_index:
            out.append(f"unit {self.unit!r} is not an element")
            return out
        for a in els:
            for b in els:
                c = self.table.get((a, b))
                if c is None or c not in self.table_index:
                    out.append(f"product {a}*{b} undefined or outside the group")
                    return out
        for a in els:
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                out.append(f"unit law fails at {a}")
            if a not in self.inverse or self.mul(self.inverse[a], a) != self.unit:
                out.append(f"{a} has no inverse")
        for a, b, c in itertools.product(els, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                out.append(f"associativity fails at ({a},{b},{c})")
                break
        return out

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a)
                   for a, b in itertools.combinations(self.elements, 2))

    def element_order(self, a: str) -> int:
        k, x = 1, a
        while x != self.unit:
            x = self.mul(x, a)
            k += 1
        return k

    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in self.elements))

    def invariants(self) -> tuple:
        return (len(self), self.is_abelian(), self.order_profile())

    def describe(self) -> dict:
        return {
            "order": len(self),
            "abelian": self.is_abelian(),
            "element_orders": dict(sorted(Counter(self.order_profile()).items())),
        }

    # subgroups and quotients

    def generated(self, gens: Iterable[str]) -> set[str]:
        sub = {self.unit}
        frontier = [self.unit]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
        return sub

    def is_subgroup(self, sub: set[str]) -> bool:
        return (self.unit in sub
                and all(self.mul(a, b) in sub for a in sub for b in sub)
                and all(self.inv(a) in sub for a in sub))

    def is_normal(self, sub: set[str]) -> bool:
        return all(self.mul(self.mul(g, h), self.inv(g)) in sub
                   for g in self.elements for h in sub)

    def subgroup(self, sub: set[str]) -> "FinGroup":
        els = tuple(a for a in self.elements if a in sub)
        table = {(a, b): self.mul(a, b) for a in els for b in els}
        return FinGroup(els, table, self.unit)

    def quotient(self, normal: set[str]) -> tuple["FinGroup", dict[str, str]]:
        """Quotient by a normal subgroup, as coset representatives.

        Each coset is named by its first element in ``self.elements`` order.
        Returns the quotient group and the projection map.
        """
        if not self.is_subgroup(normal):
            raise GroupError("not a subgroup")
        if not self.is_normal(normal):
            raise GroupError("subgroup is not normal")
        proj: dict[str, str] = {}
        reps = []
        for g in self.elements:
            if g in proj:
                continue
            reps.append(g)
            for h in normal:
                proj[self.mul(g, h)] = g
        table = {(a, b): proj[self.mul(a, b)] for a in reps for b in reps}
        return FinGroup(tuple(reps), table, proj[self.unit]), proj

    def generators(self) -> list[str]:
        """A small generating set, chosen greedily."""
        gens: list[str] = []
        span = {self.unit}
        for a in sorted(self.elements, key=lambda e: -self.element_order(e)):
            if a not in span:
                gens.append(a)
                span = self.generated(gens)
        return gens


def is_homomorphism(phi: Mapping[str, str], G: FinGroup, H: FinGroup) -> bool:
    return all(phi[G.mul(a, b)] == H.mul(phi[a], phi[b])
               for a in G.elements for b in G.elements)


def find_isomorphism(G: FinGroup, H: FinGroup) -> dict[str, str] | None:
    """Exact isomorphism search by extending images of a generating set."""
    if G.invariants() != H.invariants():
        return None
    gens = G.generators()
    candidates = [[h for h in H.elements if H.element_order(h) == G.element_order(g)]
                  for g in gens]
    for images in itertools.product(*candidates):
        phi = _extend(G, H, gens, images)
        if phi is not None and len(set(phi.values())) == len(G):
            return phi
    return None


def _extend(G, H, gens, images):
    phi = {G.unit: H.unit}
    frontier = [G.unit]
    while frontier:
        x = frontier.pop()
        for g, h in zip(gens, images):
            y = G.mul(x, g)
            img = H.mul(phi[x], h)
            if y in phi:
                if phi[y] != img:
                    return None
            else:
                phi[y] = img
                frontier.append(y)
    if not is_homomorphism(phi, G, H):
        return None
    return phi


def isomorphic(G: FinGroup, H: FinGroup) -> bool:
    """Exact test up to ``EXACT_ISO_LIMIT``; invariant comparison above it."""
    if len(G) > EXACT_ISO_LIMIT or len(H) > EXACT_ISO_LIMIT:
        return G.invariants() == H.invariants()
    return find_isomorphism(G, H) is not None


@dataclass(eq=False)
class FinGroupoid:
    """A finite groupoid with named objects and morphisms."""

    objects: tuple[str, ...]
    morphisms: dict[str, tuple[str, str]]       # name -> (source, target)
    comp: dict[tuple[str, str], str]            # (g, f) -> g after f
    ident: dict[str, str]                       # object -> identity morphism

    def __post_init__(self):
        self.objects = tuple(self.objects)
        self._homs: dict[tuple[str, str], list[str]] = {}
        for m, (s, t) in self.morphisms.items():
            self._homs.setdefault((s, t), []).append(m)

    def hom(self, x: str, y: str) -> list[str]:
        return self._homs.get((x, y), [])

    def src(self, m: str) -> str:
        return self.morphisms[m][0]

    def tgt(self, m: str) -> str:
        return self.morphisms[m][1]

    def inverse(self, m: str) -> str:
        s, t = self.morphisms[m]
        for w in self.hom(t, s):
            if self.comp[(w, m)] == self.ident[s] and self.comp[(m, w)] == self.ident[t]:
                return w
        raise GroupError(f"morphism {m} has no inverse")

    def components(self) -> list[frozenset[str]]:
        parent = {x: x for x in self.objects}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in self.morphisms.values():
            parent[find(s)] = find(t)
        groups: dict[str, set[str]] = {}
        for x in self.objects:
            groups.setdefault(find(x), set()).add(x)
        return sorted((frozenset(g) for g in groups.values()), key=sorted)

    def component_of(self, x: str) -> frozenset[str]:
        for comp in self.components():
            if x in comp:
                return comp
        raise KeyError(x)

    def vertex_group(self, x: str) -> FinGroup:
        els = tuple(self.hom(x, x))
        table = {(a, b): self.comp[(a, b)] for a in els for b in els}
        return FinGroup(els, table, self.ident[x])

    def violations(self) -> list[str]:
        out = []
        for x in self.objects:
            e = self.ident.get(x)
            if e is None or self.morphisms.get(e) != (x, x):
                out.append(f"object {x} lacks an identity")
        for (g, f), h in self.comp.items():
            if self.morphisms[g][0] != self.morphisms[f][1]:
                out.append(f"composite {g}.{f} of non-composable morphisms")
            elif self.morphisms.get(h) != (self.morphisms[f][0], self.morphisms[g][1]):
                out.append(f"composite {g}.{f} has wrong boundary")
        for m, (s, t) in self.morphisms.items():
            for w in self.hom(t, s):
                if self.comp.get((w, m)) == self.ident.get(s) and self.comp.get((m, w)) == self.ident.get(t):
                    break
            else:
                out.append(f"morphism {m} has no inverse")
        return out
