import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from omegagrp.corpus import categories, morphisms, random_groupoids
from omegagrp.crossed import functor_A, validate_crossed
from omegagrp.omega_cat import validate_category, validate_functor
from omegagrp.serialize import (
    EMITTERS,
    PARSERS,
    ParseError,
    category_to_doc,
    emit_category,
    emit_crossed,
    emit_functor,
    parse_category,
    parse_crossed,
    parse_functor,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
KINDS = {"categories": "cat", "morphisms": "functor", "crossed": "cc",
         "crossed_morphisms": "cc-morphism", "immersions": "immersion"}
FILES = sorted((d, p.name) for d in KINDS for p in (CORPUS / d).glob("*.json"))


def test_corpus_is_present():
    assert len(FILES) > 150


@pytest.mark.parametrize("kind,name", FILES)
def test_corpus_file_round_trips_bit_exactly(kind, name):
    path = CORPUS / kind / name
    text = path.read_text()
    k = KINDS[kind]
    assert EMITTERS[k](PARSERS[k](str(path))) == text


def _same_category(a, b):
    return (a.N == b.N and all(set(a.cells_at(k)) == set(b.cells_at(k)) for k in range(a.N + 1))
            and a.comp == b.comp)


@given(st.integers(0, 500))
def test_random_groupoids_round_trip(seed):
    c = random_groupoids(1, seed)[0]
    text = emit_category(c)
    back = parse_category(text)
    assert _same_category(c, back)
    assert emit_category(back) == text


def test_identities_are_omitted_and_regenerated():
    doc = category_to_doc(categories()["B2Z3"])
    names = [r["name"] for cells in doc["cells"][1:] for r in cells]
    assert not any(n.startswith("id:") for n in names)
    assert validate_category(parse_category(doc)) == []


def test_explicit_identity_rows_accepted():
    doc = category_to_doc(categories()["BZ2"])
    doc["cells"][1].append({"name": "id:*", "src": "*", "tgt": "*"})
    assert emit_category(parse_category(doc)) == emit_category(categories()["BZ2"])


def test_misnamed_identity_rejected():
    doc = category_to_doc(categories()["BZ2"])
    doc["cells"][1].append({"name": "id:q", "src": "*", "tgt": "*"})
    with pytest.raises(ParseError):
        parse_category(doc)


@pytest.mark.parametrize("text", ["{", "[]", '{"dimension": 1}', '{"dimension": 1, "cells": [["x"]]}',
                                  '{"dimension": 0, "cells": [["x", "x"]]}',
                                  '{"dimension": 1, "cells": [["x"], [{"name": "f"}]]}',
                                  '{"dimension": 1, "cells": [["x"], []], "compositions": {"2*0": []}}'])
def test_malformed_documents(text):
    with pytest.raises(ParseError):
        parse_category(text)


def test_dangling_boundary_is_reported_by_validation():
    doc = {"dimension": 1, "cells": [["x"], [{"name": "f", "src": "x", "tgt": "q"}]]}
    assert [v.rule for v in validate_category(parse_category(doc))] == ["boundary"]


def test_functor_with_path_references(tmp_path):
    f = morphisms()["BZ4_to_BZ2"]
    (tmp_path / "a.json").write_text(emit_category(f.dom))
    (tmp_path / "b.json").write_text(emit_category(f.cod))
    doc = json.loads(emit_functor(f))
    doc["source"], doc["target"] = "a.json", "b.json"
    (tmp_path / "f.json").write_text(json.dumps(doc))
    g = parse_functor(str(tmp_path / "f.json"))
    assert validate_functor(g) == []
    assert g.maps == f.maps


def test_crossed_emission_of_b2z3():
    A = functor_A(categories()["B2Z3"])
    doc = json.loads(emit_crossed(A))
    assert len(doc["groups"]["2"]["*"]["elements"]) == 3
    assert validate_crossed(parse_crossed(emit_crossed(A))) == []
