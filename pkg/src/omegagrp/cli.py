"""Command-line entry points.

Exit codes: 0 success or agreement, 1 the checked property fails,
2 parse or shape error, 3 two methods that must agree disagree.
"""

from __future__ import annotations

import argparse
import json
import sys

from .crossed import functor_A, is_cc_weak_equivalence, functor_A_morphism, is_grp_tfib_cc, validate_crossed, validate_cc_morphism
from .cylinder import verify_immersion
from .globular import Disagreement, Verdict
from .model import folk_tfib_direct, has_rlp_against_globes
from .omega_cat import boundary_globe, globe, is_folk_weak_equivalence, validate_category, validate_functor
from .omega_grp import NotAGroupoid, as_groupoid, is_weak_equivalence, pi0, pi_n, validate_groupoid
from .serialize import ParseError, emit_category, emit_crossed, parse_category, parse_cc_morphism, parse_crossed, parse_functor, parse_immersion

OK, FAIL, SHAPE, DISAGREE = 0, 1, 2, 3


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.lines: list[str] = []

    def say(self, line: str):
        self.lines.append(line)

    def flush(self):
        if self.as_json:
            sys.stdout.write(json.dumps(self.data, sort_keys=True, indent=2, default=str) + "\n")
        else:
            sys.stdout.write("\n".join(self.lines) + ("\n" if self.lines else ""))


def _report(out: _Out, violations) -> int:
    out.data["valid"] = not violations
    out.data["violations"] = [{"rule": v.rule, "message": v.message} for v in violations]
    if violations:
        out.say(f"invalid: {len(violations)} violation(s)")
        for v in violations[:20]:
            out.say(f"  {v}")
        return FAIL
    out.say("valid")
    return OK


def cmd_validate(args, out: _Out) -> int:
    kind = args.kind
    if kind in ("cat", "grp"):
        c = parse_category(args.path)
        bad = validate_category(c) if kind == "cat" else validate_groupoid(c)[0]
        return _report(out, bad)
    if kind == "functor":
        f = parse_functor(args.path)
        bad = validate_category(f.dom) + validate_category(f.cod)
        return _report(out, bad or validate_functor(f))
    if kind == "cc":
        return _report(out, validate_crossed(parse_crossed(args.path)))
    f = parse_cc_morphism(args.path)
    bad = validate_crossed(f.dom) + validate_crossed(f.cod)
    return _report(out, bad or validate_cc_morphism(f))


def _groupoid(path):
    c = parse_category(path)
    bad = validate_category(c)
    if bad:
        raise ParseError(f"not a strict omega-category: {bad[0]}")
    try:
        return as_groupoid(c)
    except NotAGroupoid as e:
        raise ParseError(f"not a groupoid: {e}") from None


def cmd_pi(args, out: _Out) -> int:
    g = _groupoid(args.path)
    objects = sorted(g.cells_at(0))
    base = args.base if args.base is not None else (objects[0] if objects else None)
    if base not in objects:
        raise ParseError(f"unknown base point {base!r}")
    top = g.N if args.max_n is None else args.max_n
    if not 0 <= top <= g.N:
        raise ParseError(f"--max-n must lie in 0..{g.N}")
    comps = pi0(g)
    out.data = {"pi0": [sorted(c) for c in comps], "base": base, "pi": {}}
    out.say(f"pi_0: {len(comps)} component(s)")
    for n in range(1, top + 1):
        desc = pi_n(g, base, n).describe()
        out.data["pi"][str(n)] = desc
        orders = ", ".join(f"{k}^{v}" for k, v in desc["element_orders"].items())
        out.say(f"pi_{n}({base}): order {desc['order']}, {'abelian' if desc['abelian'] else 'non-abelian'}, "
                f"element orders {{{orders}}}")
    return OK


def _functor(path, need_groupoids: bool):
    f = parse_functor(path)
    bad = validate_category(f.dom) + validate_category(f.cod) or validate_functor(f)
    if bad:
        raise ParseError(f"invalid morphism: {bad[0]}")
    if need_groupoids:
        try:
            as_groupoid(f.dom)
            as_groupoid(f.cod)
        except NotAGroupoid as e:
            raise ParseError(f"method needs groupoids: {e}") from None
    return f


def _verdicts(out: _Out, verdicts: dict[str, Verdict], agree_mode: bool) -> int:
    out.data["methods"] = {k: {"holds": v.holds, "witness": v.witness} for k, v in verdicts.items()}
    for k, v in verdicts.items():
        line = f"{k}: {v.holds}"
        if v.witness:
            line += f"  witness {json.dumps(v.witness, sort_keys=True, default=str)}"
        out.say(line)
    if agree_mode:
        agree = len({v.holds for v in verdicts.values()}) == 1
        out.data["agree"] = agree
        out.say("agree" if agree else "DISAGREEMENT")
        return OK if agree else DISAGREE
    return OK if all(v.holds for v in verdicts.values()) else FAIL


def cmd_weq(args, out: _Out) -> int:
    m = args.method
    f = _functor(args.path, need_groupoids=(m != "folk"))
    runs = {
        "grp1": lambda: is_weak_equivalence(f, 1), "grp2": lambda: is_weak_equivalence(f, 2),
        "grp3": lambda: is_weak_equivalence(f, 3), "grp4": lambda: is_weak_equivalence(f, 4),
        "folk": lambda: is_folk_weak_equivalence(f),
        "cc": lambda: is_cc_weak_equivalence(functor_A_morphism(f)),
    }
    chosen = list(runs) if m == "all" else [m]
    return _verdicts(out, {k: runs[k]() for k in chosen}, m == "all")


def cmd_tfib(args, out: _Out) -> int:
    f = _functor(args.path, need_groupoids=True)
    runs = {"folk": lambda: folk_tfib_direct(f), "rlp": lambda: has_rlp_against_globes(f),
            "cc": lambda: is_grp_tfib_cc(f)}
    chosen = list(runs) if args.method == "all" else [args.method]
    return _verdicts(out, {k: runs[k]() for k in chosen}, args.method == "all")


def cmd_to_crossed(args, out: _Out) -> int:
    A = functor_A(_groupoid(args.path))
    bad = validate_crossed(A)
    if bad:
        sys.stderr.write(f"A(G) failed validation: {bad[0]}\n")
        return FAIL
    sys.stdout.write(emit_crossed(A))
    out.as_json, out.lines = False, []
    return OK


def cmd_check_immersion(args, out: _Out) -> int:
    v = verify_immersion(parse_immersion(args.path))
    out.data = {"immersion": v.holds, "failure": v.failure}
    out.say(f"immersion: {v.holds}")
    if v.failure:
        out.say(f"  failing equation: {json.dumps(v.failure, sort_keys=True)}")
    return OK if v.holds else FAIL


def cmd_globe(args, out: _Out) -> int:
    N = args.n if args.truncation is None else args.truncation
    try:
        c = boundary_globe(args.n, N) if args.boundary else globe(args.n, N)
    except ValueError as e:
        raise ParseError(str(e)) from None
    sys.stdout.write(emit_category(c))
    out.as_json, out.lines = False, []
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omegagrp", description="Checkers for finite strict omega-groupoids.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, "validate a document")
    sp.add_argument("path")
    sp.add_argument("--kind", choices=["cat", "grp", "cc", "functor", "cc-morphism"], default="cat")
    sp = add("pi", cmd_pi, "homotopy groups of a groupoid")
    sp.add_argument("path")
    sp.add_argument("--base")
    sp.add_argument("--max-n", type=int)
    sp = add("weq", cmd_weq, "weak-equivalence tests")
    sp.add_argument("path")
    sp.add_argument("--method", choices=["grp1", "grp2", "grp3", "grp4", "folk", "cc", "all"], default="all")
    sp = add("tfib", cmd_tfib, "trivial-fibration tests")
    sp.add_argument("path")
    sp.add_argument("--method", choices=["folk", "rlp", "cc", "all"], default="all")
    sp = add("to-crossed", cmd_to_crossed, "emit the crossed complex A(G)")
    sp.add_argument("path")
    sp = add("check-immersion", cmd_check_immersion, "verify an immersion bundle")
    sp.add_argument("path")
    sp = add("globe", cmd_globe, "emit the n-globe or its boundary")
    sp.add_argument("n", type=int)
    sp.add_argument("--truncation", type=int, help="dimension N of the emitted file (default n)")
    sp.add_argument("--boundary", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.json)
    try:
        code = args.fn(args, out)
    except ParseError as e:
        out.data = {"error": str(e)}
        out.lines = [f"error: {e}"]
        code = SHAPE
    except Disagreement as e:
        out.data = {"disagreement": str(e)}
        out.lines = [f"DISAGREEMENT: {e}"]
        code = DISAGREE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
