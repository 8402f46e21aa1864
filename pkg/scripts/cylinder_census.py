"""Enumerate cylinders in small groupoids and tally how the algebra behaves."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from cyl_laws import composites, cylinders, globularity, inverses, units  # noqa: E402
from omegagrp.corpus import categories  # noqa: E402


@dataclass
class CensusConfig:
    groupoids: list[str] = field(default_factory=lambda: ["BZ2", "I1", "B2Z4", "EZ2", "BZ3_2"])
    max_level: int = 2


def census(cfg: CensusConfig) -> list[dict]:
    cats = categories()
    rows = []
    for name in cfg.groupoids:
        c = cats[name]
        t0 = time.perf_counter()
        cy = cylinders(c, cfg.max_level)
        bad, count = composites(c, cy)
        rows.append({
            "groupoid": name,
            "cylinders": {n: len(v) for n, v in cy.items()},
            "composites": count,
            "defects": {"globular": len(globularity(c, cy)), "units": len(units(c, cy)),
                        "composites": len(bad), "inverses": len(inverses(c, cy))},
            "seconds": round(time.perf_counter() - t0, 3),
        })
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--groupoids", nargs="+")
    p.add_argument("--max-level", type=int)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    cfg = CensusConfig()
    if args.groupoids:
        cfg.groupoids = args.groupoids
    if args.max_level is not None:
        cfg.max_level = args.max_level
    rows = census(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        counts = " ".join(f"L{n}={k}" for n, k in r["cylinders"].items())
        defects = sum(r["defects"].values())
        print(f"{r['groupoid']:8} {counts:24} composites={r['composites']:<6} defects={defects} {r['seconds']}s")


if __name__ == "__main__":
    main()
