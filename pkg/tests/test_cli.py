from __future__ import annotations

import json
import subprocess
import sys

import pytest

from edrep.characters import Character, character_table
from edrep.cli import main
from edrep.cyclotomic import BaseField
from edrep.groups import FiniteGroup
from edrep.modular import ModularRep


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def q8_files(tmp_path, capsys):
    code, out, _ = run(capsys, "group", "schilling", "--s", 4)
    assert code == 0
    g = tmp_path / "q8.json"
    g.write_text(out)
    G = FiniteGroup.from_json(json.loads(out))
    chi = next(c for c in character_table(G) if c.degree == 2)
    c = tmp_path / "chi2.json"
    c.write_text(json.dumps(chi.to_json()))
    k = tmp_path / "Q.json"
    k.write_text(json.dumps(BaseField.rationals().to_json()))
    return g, c, k


def test_ed_q8(capsys, q8_files):
    g, c, k = q8_files
    code, out, _ = run(capsys, "ed", "--group", g, "--char", c, "--field", k, "--primes", 2)
    assert code == 0
    report = json.loads(out)
    assert report["exact"] == 1
    assert report["factors"][0]["schur"]["strategy"] == "PGroupRule"
    code, text, _ = run(capsys, "ed", "--group", g, "--char", c, "--field", "Q", "--format", "text")
    assert code == 0 and "ed: 1" in text


def test_char_table_round_trip(capsys, q8_files):
    g, _, _ = q8_files
    code, out, _ = run(capsys, "char-table", g)
    assert code == 0
    data = json.loads(out)
    G = FiniteGroup.from_json(data["group"])
    chars = [Character.from_json({"values": row, "class_representatives": data["class_representatives"]}, G)
             for row in data["irreducibles"]]
    assert set(chars) == set(character_table(G))


def test_schur_index(capsys, q8_files):
    _, c, _ = q8_files
    code, out, _ = run(capsys, "schur-index", c, "--field", "Q")
    assert code == 0 and json.loads(out)["value"] == 2
    code, _, err = run(capsys, "schur-index", c, "--field", "Q", "--hint", 1)
    assert code == 1 and json.loads(err)["error"] == "inconsistent_hint"


def test_family_schilling(capsys):
    code, out, _ = run(capsys, "family", "--schilling", "--l", 1)
    assert code == 0
    data = json.loads(out)
    G = FiniteGroup.from_json(data["group"])
    assert G.order == 16
    chi = Character.from_json(data["character"], G)
    assert chi.degree == 4
    assert BaseField.from_json(data["field"]).degree() == 1


def test_family_brauer_cap(capsys):
    code, out, _ = run(capsys, "family", "--brauer", "--primes", "3,7")
    assert code == 0 and FiniteGroup.from_json(json.loads(out)["group"]).order == 336
    code, _, err = run(capsys, "family", "--brauer", "--primes", "3,7,11")
    assert code == 1 and json.loads(err)["error"] == "cap_exceeded"
    code, _, _ = run(capsys, "family", "--schilling", "--brauer", "--l", 1)
    assert code == 1


def test_brauer_independence(capsys):
    code, out, _ = run(capsys, "brauer-independence", "--primes", "3,7")
    assert code == 0
    data = json.loads(out)
    assert data["independent"] is True
    row = next(r for r in data["subsets"] if r["subset"] == [3, 7])
    assert row["N"] == "189"
    code, _, err = run(capsys, "brauer-independence", "--primes", 5)
    assert code == 1 and json.loads(err)["error"] == "bad_prime"


def test_cd_weil(capsys):
    code, out, _ = run(capsys, "cd-weil", "--center-degree", 2, "--deg", 8, "--m", 2, "--p", 2, "--balanced")
    assert code == 0 and json.loads(out)["cd_p"] == 2 * 2 * 6
    code, _, err = run(capsys, "cd-weil", "--center-degree", 2, "--deg", 8, "--m", 2, "--p", 2,
                       "--no-balanced")
    assert code == 2 and json.loads(err)["error"] == "not_balanced"
    code, out, _ = run(capsys, "cd-weil", "--center-degree", 1, "--deg", 4, "--j", 3, "--p", 2)
    assert json.loads(out)["cd_p"] == 3


def test_rank_variety_and_lower_bound(capsys, tmp_path):
    code, out, _ = run(capsys, "modular-lower-bound", "--n", 3, "--q", 2, "--seed", 5)
    assert code == 0
    data = json.loads(out)
    assert data["certified"] and data["ed_lower_bound"] == 3 and data["dimension"] == 6
    rep = ModularRep.from_json(data["representation"])
    f = tmp_path / "rep.json"
    f.write_text(json.dumps(rep.to_json()))
    code, out, _ = run(capsys, "rank-variety", f)
    assert code == 0
    assert json.loads(out) == data["rank_variety"]
    code, _, err = run(capsys, "modular-lower-bound", "--n", 0)
    assert code == 1


def test_bad_input_files(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "char-table", bad)
    assert code == 1
    code, _, err = run(capsys, "char-table", tmp_path / "missing.json")
    assert code == 1
    bad.write_text(json.dumps({"generators": [[0, 0]]}))
    code, _, err = run(capsys, "char-table", bad)
    assert code == 1 and json.loads(err)["error"] == "not_permutation"


def test_determinism(capsys, q8_files):
    g, c, k = q8_files
    outs = set()
    for _ in range(2):
        for argv in (("char-table", g), ("ed", "--group", g, "--char", c, "--field", k),
                     ("modular-lower-bound", "--n", 2, "--seed", 3), ("family", "--schilling", "--l", 1)):
            code, out, _ = run(capsys, *argv)
            assert code == 0
            outs.add((argv, out))
    assert len(outs) == 4


def test_console_script(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "edrep.cli", "group", "quaternion-semidirect", "--p", "7"],
                          capture_output=True, text=True, check=True)
    assert FiniteGroup.from_json(json.loads(proc.stdout)).order == 28
