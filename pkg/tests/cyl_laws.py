"""Exhaustive checks of the cylinder algebra; each returns a list of defects."""

from __future__ import annotations

from omegagrp.cylinder import (
    brute_force_inverses,
    cyl_compose,
    cyl_composable,
    cyl_inverse,
    cyl_source,
    cyl_source_iter,
    cyl_target,
    cyl_target_iter,
    cyl_trivial,
    cyl_unit,
    enumerate_cylinders,
    gamma_functor_image,
    principal_of_composite,
    validate_cylinder,
)


def cylinders(c, max_level=2):
    return {n: list(enumerate_cylinders(c, n)) for n in range(max_level + 1)}


def _lift_unit(c, U, level):
    while U.level < level:
        U = cyl_unit(c, U)
    return U


def composable_pairs(c, us, k):
    """Pairs ``(U, V)`` with the k-target of U equal to the k-source of V."""
    by_src = {}
    for V in us:
        by_src.setdefault(cyl_source_iter(c, V, k), []).append(V)
    return [(U, V) for U in us for V in by_src.get(cyl_target_iter(c, U, k), ())]


def globularity(c, cyls) -> list:
    bad = []
    for n, us in cyls.items():
        for W in us:
            if validate_cylinder(c, W):
                bad.append(("invalid", W))
            if n == 0:
                continue
            S, T = cyl_source(c, W), cyl_target(c, W)
            if validate_cylinder(c, S) or validate_cylinder(c, T):
                bad.append(("boundary invalid", W))
            if n >= 2 and (cyl_source(c, S) != cyl_source(c, T) or cyl_target(c, S) != cyl_target(c, T)):
                bad.append(("globular", W))
    return bad


def units(c, cyls) -> list:
    bad = []
    for n, us in cyls.items():
        for W in us:
            for k in range(n):
                right = _lift_unit(c, cyl_source_iter(c, W, k), n)
                left = _lift_unit(c, cyl_target_iter(c, W, k), n)
                if cyl_compose(c, right, W, k) != W or cyl_compose(c, W, left, k) != W:
                    bad.append(("unit", k, W))
            U = cyl_unit(c, W)
            if validate_cylinder(c, U) or cyl_source(c, U) != W or cyl_target(c, U) != W:
                bad.append(("unit shape", W))
    return bad


def composites(c, cyls) -> tuple[list, int]:
    """Validity of every defined composite and the principal formula at level 1."""
    bad, count = [], 0
    for n, us in cyls.items():
        for k in range(n):
            for U, V in composable_pairs(c, us, k):
                count += 1
                W = cyl_compose(c, U, V, k)
                if validate_cylinder(c, W):
                    bad.append(("composite invalid", k, U, V))
                if cyl_source_iter(c, W, k) != cyl_source_iter(c, U, k) or \
                        cyl_target_iter(c, W, k) != cyl_target_iter(c, V, k):
                    bad.append(("composite boundary", k, U, V))
                if n == 1 and k == 0 and W.shifted.principal != principal_of_composite(c, U, V):
                    bad.append(("principal formula", U, V))
    return bad, count


def inverses(g, cyls) -> list:
    bad = []
    for n, us in cyls.items():
        if n == 0:
            continue
        for W in us:
            X = cyl_inverse(g, W)
            if validate_cylinder(g, X):
                bad.append(("inverse invalid", W))
                continue
            if cyl_compose(g, W, X, n - 1) != cyl_unit(g, cyl_source(g, W)) or \
                    cyl_compose(g, X, W, n - 1) != cyl_unit(g, cyl_target(g, W)):
                bad.append(("inverse equations", W))
            if brute_force_inverses(g, W) != [X]:
                bad.append(("brute force", W))
    return bad


def naturality(f, cyls, max_pairs: int = 2000) -> list:
    """Top, bottom and trivial cylinders commute with a functor, and so do the operations.

    The top/bottom/trivial equations are checked on every cylinder; preservation
    of composites on an evenly strided sample of at most ``max_pairs`` per level.
    """
    C, D = f.dom, f.cod
    bad = []
    for n, us in cyls.items():
        for U in us:
            fU = gamma_functor_image(f, U)
            if fU.top != f(U.dim, U.top):
                bad.append(("top", U))
            if fU.bot != f(U.dim, U.bot):
                bad.append(("bottom", U))
            if validate_cylinder(D, fU):
                bad.append(("image invalid", U))
            if n and (gamma_functor_image(f, cyl_source(C, U)) != cyl_source(D, fU)):
                bad.append(("source", U))
            if gamma_functor_image(f, cyl_unit(C, U)) != cyl_unit(D, fU):
                bad.append(("unit", U))
        for x in C.cells_at(n):
            if gamma_functor_image(f, cyl_trivial(C, x, n)) != cyl_trivial(D, f(n, x), n):
                bad.append(("trivial", x))
    for n, us in cyls.items():
        for k in range(n):
            pairs = composable_pairs(C, us, k)
            step = max(1, len(pairs) // max_pairs)
            for U, V in pairs[::step]:
                lhs = gamma_functor_image(f, cyl_compose(C, U, V, k))
                rhs = cyl_compose(D, gamma_functor_image(f, U), gamma_functor_image(f, V), k)
                if lhs != rhs:
                    bad.append(("compose", k, U, V))
    return bad
