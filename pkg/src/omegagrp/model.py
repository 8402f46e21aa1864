"""Trivial fibrations and weak equivalences of strict omega-groupoids, compared."""

from __future__ import annotations

from dataclasses import dataclass, field

from .crossed import (
    functor_A_morphism,
    is_cc_weak_equivalence,
    is_grp_tfib_cc,
)
from .globular import Disagreement, Verdict
from .omega_cat import (
    OmegaCat,
    OmegaFunctor,
    functor_from_function,
    globe,
    is_folk_weak_equivalence,
    validate_functor,
)
from .omega_grp import as_groupoid, inverse, is_weak_equivalence


# maps out of globes, given by the images of generators

def globe_generators(n: int, with_top: bool = True) -> list[tuple[str, int]]:
    """Generators of the ``n``-globe as ``(name, dimension)``, lowest dimension first."""
    gens = [(f"e{k}{sign}", k) for k in range(n) for sign in "-+"]
    if with_top:
        gens.append((f"e{n}", n))
    return gens


def _boundary_of(gen: str) -> tuple[str, str] | None:
    k = int(gen[1:].rstrip("+-"))
    if k == 0:
        return None
    return f"e{k - 1}-", f"e{k - 1}+"


def globe_maps(n: int, c: OmegaCat, with_top: bool = True):
    """All globular maps from the (boundary of the) ``n``-globe into ``c``.

    Dimensions above ``c.N`` range over identity cells.
    """
    gens = globe_generators(n, with_top)

    def extend(k, assignment):
        if k == len(gens):
            yield dict(assignment)
            return
        g, dim = gens[k]
        bd = _boundary_of(g)
        if bd is None:
            candidates = c.cells_at(0)
        else:
            candidates = c.homset(dim, assignment[bd[0]], assignment[bd[1]])
        for u in candidates:
            assignment[g] = u
            yield from extend(k + 1, assignment)
        assignment.pop(g, None)

    yield from extend(0, {})


def globe_functor(n: int, c: OmegaCat, images: dict[str, str]) -> OmegaFunctor:
    """The functor ``globe(n, N) -> c`` freely extending generator images."""
    O = globe(n, c.N)
    dims = dict(globe_generators(n))

    def fn(k, u):
        gen = _strip(u)
        return c.lift(images[gen], dims[gen], k)

    return functor_from_function(O, c, fn)


def _strip(u: str) -> str:
    while u.startswith("id:"):
        u = u[3:]
    return u


@dataclass
class LiftingProblem:
    """A commutative square from the globe inclusion ``i_n`` to a map ``f``."""

    n: int
    top: dict[str, str]        # boundary of the n-globe -> dom f
    bottom: dict[str, str]     # n-globe -> cod f

    def describe(self) -> dict:
        return {"dimension": self.n, "top": dict(sorted(self.top.items())),
                "bottom": dict(sorted(self.bottom.items()))}


def _dim(gen: str) -> int:
    return int(gen[1:].rstrip("+-"))


def has_rlp_against_globes(f: OmegaFunctor, up_to_dim: int | None = None) -> Verdict:
    """Right lifting against ``i_n`` for ``n <= up_to_dim``, by enumerating squares.

    Maps out of globes are enumerated on both sides independently and joined
    on their boundary restrictions; a lift must split both triangles.
    """
    errs = validate_functor(f)
    if errs:
        raise ValueError(f"invalid functor: {errs[0]}")
    C, D = f.dom, f.cod
    top_dim = C.N + 1 if up_to_dim is None else up_to_dim
    if top_dim > C.N + 1:
        raise ValueError(f"up_to_dim must be at most {C.N + 1}")
    for n in range(top_dim + 1):
        top_gen = f"e{n}"

        def restrict(m):
            return tuple(sorted((g, u) for g, u in m.items() if g != top_gen))

        bottoms: dict[tuple, list[dict]] = {}
        for m in globe_maps(n, D):
            bottoms.setdefault(restrict(m), []).append(m)
        lifts: dict[tuple, list[dict]] = {}
        for m in globe_maps(n, C):
            lifts.setdefault(restrict(m), []).append(m)
        for alpha in globe_maps(n, C, with_top=False):
            pushed = tuple(sorted((g, f(_dim(g), u)) for g, u in alpha.items()))
            for beta in bottoms.get(pushed, ()):
                ok = any(f(n, lam[top_gen]) == beta[top_gen]
                         for lam in lifts.get(restrict(alpha), ()))
                if not ok:
                    return Verdict(False, LiftingProblem(n, alpha, beta).describe(), "rlp")
    return Verdict(True, None, "rlp")


def folk_tfib_direct(f: OmegaFunctor) -> Verdict:
    """Surjectivity on objects and on every hom of parallel cells."""
    G, H = f.dom, f.cod
    images = {f(0, x) for x in G.cells_at(0)}
    for y in H.cells_at(0):
        if y not in images:
            return Verdict(False, {"condition": "objects", "object": y}, "folk")
    for n in range(G.N + 1):
        for u, v in G.parallel_pairs(n):
            got = {f(n + 1, a) for a in G.homset(n + 1, u, v)}
            for b in H.homset(n + 1, f(n, u), f(n, v)):
                if b not in got:
                    return Verdict(False, {"condition": "hom", "dimension": n + 1,
                                           "pair": [u, v], "cell": b}, "folk")
    return Verdict(True, None, "folk")


def is_folk_trivial_fibration(f: OmegaFunctor) -> Verdict:
    as_groupoid(f.dom)
    as_groupoid(f.cod)
    direct = folk_tfib_direct(f)
    rlp = has_rlp_against_globes(f)
    if direct.holds != rlp.holds:
        raise Disagreement(f"direct {direct} and lifting {rlp} disagree")
    return direct


# the comparison harness

@dataclass
class Comparison:
    verdicts: dict[str, Verdict]
    agree: bool
    lift_checks: int = 0
    lift_failures: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"agree": self.agree,
                "methods": {k: {"holds": v.holds, "witness": v.witness} for k, v in self.verdicts.items()},
                "lift_checks": self.lift_checks, "lift_failures": self.lift_failures}


def compare_weak_equivalences(f: OmegaFunctor) -> Comparison:
    v = {"grp": is_weak_equivalence(f, 1),
         "folk": is_folk_weak_equivalence(f),
         "cc": is_cc_weak_equivalence(functor_A_morphism(f))}
    return Comparison(v, len({x.holds for x in v.values()}) == 1)


def reconstruct_lift(f: OmegaFunctor, u: str, v: str, b: str, n: int) -> str | None:
    """Lift ``b: f(u) -> f(v)`` through a lift of ``1 *_0 b`` based at an identity.

    ``u, v`` are parallel ``(n-1)``-cells with ``n >= 2``.  The based lift
    ``a'`` is searched among cells from ``1_x`` to ``w(u) *_0 v``; the answer
    is ``1_u *_0 a'``.
    """
    G, H = f.dom, f.cod
    x = G.src_iter(u, n - 1, 0)
    fu = f(n - 1, u)
    bp = H.compose(n, 0, H.lift(inverse(H, n - 1, 0, fu), n - 1, n), b)
    t = G.compose(n - 1, 0, inverse(G, n - 1, 0, u), v)
    for ap in G.homset(n, G.lift(x, 0, n - 1), t):
        if f(n, ap) == bp:
            return G.compose(n, 0, G.lift(u, n - 1, n), ap)
    return None


def compare_trivial_fibrations(f: OmegaFunctor) -> Comparison:
    as_groupoid(f.dom)
    as_groupoid(f.cod)
    direct = folk_tfib_direct(f)
    v = {"folk": direct, "rlp": has_rlp_against_globes(f), "cc": is_grp_tfib_cc(f)}
    out = Comparison(v, len({x.holds for x in v.values()}) == 1)
    if v["cc"].holds:
        G, H = f.dom, f.cod
        for n in range(2, G.N + 2):
            for u, w in G.parallel_pairs(n - 1):
                for b in H.homset(n, f(n - 1, u), f(n - 1, w)):
                    a = reconstruct_lift(f, u, w, b, n)
                    out.lift_checks += 1
                    if a is None or G.s(n, a) != u or G.t(n, a) != w or f(n, a) != b:
                        out.lift_failures.append({"dimension": n, "pair": [u, w], "cell": b, "lift": a})
    return out
