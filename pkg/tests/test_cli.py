import json
import subprocess
import sys
from pathlib import Path

import pytest

from omegagrp.cli import main
from omegagrp.crossed import is_grp_tfib_cc
from omegagrp.corpus import morphisms
from omegagrp.omega_cat import validate_category
from omegagrp.omega_grp import is_weak_equivalence
from omegagrp.serialize import parse_category, parse_crossed

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
CAT = CORPUS / "categories"
MOR = CORPUS / "morphisms"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_validate_groupoid(capsys):
    assert run(capsys, "validate", CAT / "BZ2.json", "--kind", "grp")[0] == 0


def test_validate_parallel_pair_as_groupoid(capsys):
    code, data = run_json(capsys, "validate", CAT / "parallel_pair.json", "--kind", "grp")
    assert code == 1 and data["violations"][0]["rule"] == "inverse"


def test_malformed_document(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "validate", p)[0] == 2
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2


@pytest.mark.parametrize("kind,path", [("cc", CORPUS / "crossed" / "B2Z3.json"),
                                       ("functor", MOR / "BZ4_to_BZ2.json"),
                                       ("cc-morphism", CORPUS / "crossed_morphisms" / "BZ4_to_BZ2.json")])
def test_validate_other_kinds(capsys, kind, path):
    assert run(capsys, "validate", path, "--kind", kind)[0] == 0


def test_pi_b2z3(capsys):
    code, data = run_json(capsys, "pi", CAT / "B2Z3.json", "--base", "*")
    assert code == 0
    assert data["pi"]["1"]["order"] == 1
    assert data["pi"]["2"] == {"order": 3, "abelian": True, "element_orders": {"1": 1, "3": 2}}


def test_pi_i1_and_bz2(capsys):
    _, data = run_json(capsys, "pi", CAT / "I1.json", "--base", "x")
    assert data["pi"]["1"]["order"] == 1 and len(data["pi0"]) == 1
    _, data = run_json(capsys, "pi", CAT / "BZ2.json")
    assert data["pi"]["1"]["order"] == 2


def test_pi_unknown_base(capsys):
    assert run(capsys, "pi", CAT / "BZ2.json", "--base", "nowhere")[0] == 2


def test_pi_human_output(capsys):
    code, out = run(capsys, "pi", CAT / "B2Z3.json")
    assert code == 0 and "pi_2(*): order 3, abelian" in out


@pytest.mark.parametrize("name,expected", [("I1_to_point", True), ("BZ2_to_point", False), ("id_BZ2", True)])
def test_weq_all(capsys, name, expected):
    code, data = run_json(capsys, "weq", MOR / f"{name}.json")
    assert code == 0 and data["agree"]
    assert {v["holds"] for v in data["methods"].values()} == {expected}
    assert set(data["methods"]) == {"grp1", "grp2", "grp3", "grp4", "folk", "cc"}


def test_weq_single_method_fails_with_1(capsys):
    assert run(capsys, "weq", MOR / "BZ2_to_point.json", "--method", "grp3")[0] == 1


def test_weq_folk_on_categories(capsys):
    assert run(capsys, "weq", MOR / "parallel_pair_swap.json", "--method", "folk")[0] == 0
    assert run(capsys, "weq", MOR / "parallel_pair_swap.json", "--method", "cc")[0] == 2


@pytest.mark.parametrize("name,expected", [("id_BZ2", True), ("discrete_to_point", False), ("I1_to_point", True)])
def test_tfib_all(capsys, name, expected):
    code, data = run_json(capsys, "tfib", MOR / f"{name}.json")
    assert code == 0 and data["agree"]
    assert {v["holds"] for v in data["methods"].values()} == {expected}
    if not expected:
        assert all(v["witness"] for v in data["methods"].values())


def test_to_crossed(capsys):
    code, out = run(capsys, "to-crossed", CAT / "B2Z3.json")
    assert code == 0
    c = parse_crossed(out)
    assert len(c.group(2, "*")) == 3
    code, out = run(capsys, "to-crossed", CAT / "BZ2.json")
    assert json.loads(out)["groups"] == {}


def test_to_crossed_i1_records_actions(capsys):
    code, out = run(capsys, "to-crossed", CAT / "I1.json")
    doc = json.loads(out)
    assert code == 0 and doc["groups"] == {} and len(doc["base"]["objects"]) == 2


@pytest.mark.parametrize("name,code", [("identity_I1", 0), ("point_into_I1", 0), ("point_into_discrete", 1)])
def test_check_immersion(capsys, name, code):
    got, out = run(capsys, "check-immersion", CORPUS / "immersions" / f"{name}.json")
    assert got == code
    if code:
        assert "failing equation" in out


def test_globe(capsys):
    code, out = run(capsys, "globe", 2)
    c = parse_category(out)
    assert code == 0 and validate_category(c) == [] and len(c.cells_at(2)) == 5
    code, out = run(capsys, "globe", 2, "--boundary")
    assert code == 0 and parse_category(out).N == 2
    assert run(capsys, "globe", 3, "--truncation", 1)[0] == 2


@pytest.mark.parametrize("name", sorted(morphisms()))
def test_cli_matches_library(capsys, name):
    f = morphisms()[name]
    _, w = run_json(capsys, "weq", MOR / f"{name}.json", "--method", "grp1")
    assert w["methods"]["grp1"]["holds"] == is_weak_equivalence(f, 1).holds
    _, t = run_json(capsys, "tfib", MOR / f"{name}.json", "--method", "cc")
    assert t["methods"]["cc"]["holds"] == is_grp_tfib_cc(f).holds


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "omegagrp", "validate", str(CAT / "I1.json")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "valid"
