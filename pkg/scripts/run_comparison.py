"""Compare the weak-equivalence and trivial-fibration routes over the morphism corpus."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field

from omegagrp.corpus import morphisms
from omegagrp.model import compare_trivial_fibrations, compare_weak_equivalences
from omegagrp.omega_grp import is_weak_equivalence


@dataclass
class ComparisonConfig:
    names: list[str] = field(default_factory=list)   # empty means the whole corpus


def run(cfg: ComparisonConfig | None = None) -> list[dict]:
    cfg = cfg or ComparisonConfig()
    rows = []
    for name, f in morphisms().items():
        if cfg.names and name not in cfg.names:
            continue
        t0 = time.perf_counter()
        w = compare_weak_equivalences(f)
        grp = {m: is_weak_equivalence(f, m).holds for m in (1, 2, 3, 4)}
        tf = compare_trivial_fibrations(f)
        rows.append({
            "name": name,
            "weq": {k: v.holds for k, v in w.verdicts.items()} | {f"grp{m}": h for m, h in grp.items()},
            "weq_agree": w.agree and len(set(grp.values())) == 1,
            "tfib": {k: v.holds for k, v in tf.verdicts.items()},
            "tfib_agree": tf.agree,
            "lift_checks": tf.lift_checks,
            "lift_failures": len(tf.lift_failures),
            "seconds": round(time.perf_counter() - t0, 4),
        })
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("names", nargs="*", help="morphism names (default: all)")
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    rows = run(ComparisonConfig(names=args.names))
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'morphism':28} {'weq':>5} {'tfib':>5} agree lifts")
    for r in rows:
        ok = r["weq_agree"] and r["tfib_agree"] and not r["lift_failures"]
        print(f"{r['name']:28} {str(r['weq']['folk']):>5} {str(r['tfib']['folk']):>5} "
              f"{'yes' if ok else 'NO':>5} {r['lift_checks']:>5}")
    w = sum(r["weq"]["folk"] for r in rows)
    t = sum(r["tfib"]["folk"] for r in rows)
    bad = sum(not (r["weq_agree"] and r["tfib_agree"]) or r["lift_failures"] > 0 for r in rows)
    print(f"\n{len(rows)} morphisms, {w} weak equivalences, {t} trivial fibrations, {bad} disagreements")


if __name__ == "__main__":
    main()
