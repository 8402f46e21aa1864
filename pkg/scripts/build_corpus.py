"""Write the example corpus as canonical JSON under corpus/."""

from __future__ import annotations

import argparse
from pathlib import Path

from omegagrp.corpus import categories, groupoid_names, immersions, morphisms, category_morphisms, random_groupoids
from omegagrp.crossed import functor_A, functor_A_morphism
from omegagrp.omega_grp import as_groupoid
from omegagrp.serialize import cc_morphism_to_doc, dumps, emit_category, emit_crossed, emit_functor, emit_immersion


def build(root: Path) -> dict[str, int]:
    counts = {}

    def put(kind, name, text):
        d = root / kind
        d.mkdir(parents=True, exist_ok=True)
        (d / f"{name}.json").write_text(text)
        counts[kind] = counts.get(kind, 0) + 1

    cats = categories()
    for name, c in cats.items():
        put("categories", name, emit_category(c))
    for i, g in enumerate(random_groupoids()):
        put("categories", f"random_groupoid_{i:02d}", emit_category(g))
    for name, f in {**morphisms(), **category_morphisms()}.items():
        put("morphisms", name, emit_functor(f))
    for name in groupoid_names():
        put("crossed", name, emit_crossed(functor_A(as_groupoid(cats[name]))))
    for name, f in morphisms().items():
        put("crossed_morphisms", name, dumps(cc_morphism_to_doc(functor_A_morphism(f))))
    for name, b in immersions().items():
        put("immersions", name, emit_immersion(b.witness))
    return counts


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "corpus")
    args = p.parse_args()
    for kind, n in sorted(build(args.out).items()):
        print(f"{kind}: {n} files")


if __name__ == "__main__":
    main()
