import json

import jsonschema
import pytest

from conftest import fixture_path
from mcl.cli import main

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["verdict", "mode", "tCompliance", "witness", "stats"],
    "properties": {
        "verdict": {"enum": ["entailed", "not entailed", "vacuous"]},
        "entailed": {"type": "boolean"},
        "mode": {"type": "string"},
        "query": {"type": "string"},
        "tCompliance": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["status", "violated"],
                    "properties": {
                        "status": {"enum": ["compliant", "violated", "not-applicable"]},
                        "violated": {"type": "array", "items": {"type": "string"}},
                    },
                },
            ]
        },
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["type", "bits"],
                    "properties": {"bits": {"type": "object", "additionalProperties": {"type": "boolean"}}},
                },
            ]
        },
        "stats": {
            "type": "object",
            "properties": {"types": {"type": "integer"}, "atoms": {"type": "integer"}},
        },
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def entail(capsys, kb, query, mode, *extra):
    return run(capsys, "entail", "--kb", str(fixture_path(kb)), "--query", query, "--mode", mode, *extra)


def test_exit_codes(capsys):
    assert entail(capsys, "birds", "T(Bird) <= Fly.", "mcl")[0] == 0
    assert entail(capsys, "birds", "T(Bird) <= Penguin.", "mcl")[0] == 1
    assert entail(capsys, "youngperson_strict", "T(Student) <= Quiet.", "mclt")[0] == 3
    code, _, err = entail(capsys, "birds", "T(Bird) <= Fly.", "module=nope")
    assert code == 2 and "unknown module" in err
    code, _, err = entail(capsys, "birds", "T(Bird) <= (Fly", "mcl")
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "entail", "--kb", "/no/such.kb", "--query", "T(A) <= B.", "--mode", "mcl")
    assert code == 2


def test_atom_cap_is_an_error(capsys, monkeypatch):
    code, _, err = entail(capsys, "homeowner", "T(Italian) <= HomeOwner.", "mcl", "--max-atoms", "5")
    assert code == 2 and "atoms" in err
    monkeypatch.setenv("MCL_MAX_ATOMS", "5")
    assert entail(capsys, "homeowner", "T(Italian) <= HomeOwner.", "mcl")[0] == 2


@pytest.mark.parametrize(
    "kb, query, mode",
    [
        ("birds", "T(Bird) <= Fly.", "mcl"),
        ("birds", "T(Bird) <= Penguin.", "mclt"),
        ("youngperson_strict", "T(Student) <= Quiet.", "mclt"),
        ("students_core", "T(PhDStudent) <= Young.", "module=m2"),
        ("birds", "Penguin <= Bird.", "classical"),
    ],
)
def test_json_schema(capsys, kb, query, mode):
    _, out, _ = entail(capsys, kb, query, mode, "--json")
    jsonschema.validate(json.loads(out), VERDICT_SCHEMA)


def test_json_is_deterministic(capsys):
    first = entail(capsys, "homeowner_modular", "T(PhDStudent and Italian) <= HomeOwner.", "mcl", "--json")[1]
    second = entail(capsys, "homeowner_modular", "T(PhDStudent and Italian) <= HomeOwner.", "mcl", "--json")[1]
    assert first == second
    timed = json.loads(entail(capsys, "birds", "T(Bird) <= Fly.", "mcl", "--json", "--timings")[1])
    assert "millis" in timed["stats"]


def test_rank_json(capsys):
    code, out, _ = run(capsys, "rank", "--kb", str(fixture_path("birds")), "--json", "--concept", "Bird and Penguin")
    data = json.loads(out)
    assert code == 0 and data["order"] == 2
    assert data["concepts"]["Penguin"] == 1 and data["concepts"]["Bird and Penguin"] == 1
    code, out, _ = run(capsys, "rank", "--kb", str(fixture_path("youngperson")), "--json")
    assert set(json.loads(out)["defaults"].values()) == {"inf"}


def test_check(capsys, tmp_path):
    assert run(capsys, "check", "--kb", str(fixture_path("students")))[0] == 0
    bad = tmp_path / "bad.kb"
    bad.write_text("strict:\n  A <= Bot.\nabox:\n  A(a).\n")
    code, out, _ = run(capsys, "check", "--kb", str(bad))
    assert code == 1 and "inconsistent" in out


def test_model(capsys):
    code, out, _ = run(capsys, "model", "--kb", str(fixture_path("birds")), "--json")
    data = json.loads(out)
    assert code == 0 and len(data["types"]) == 6
    assert all(len(v) == 2 for v in data["modules"]["birds"]["vectors"])
    for x, y, why in data["globalEdges"]:
        assert why == ["birds"]


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle-compare", "--count", "10", "--queries", "5", "--seed", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["queries"] == 50 and not data["disagreements"]
