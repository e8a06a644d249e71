import json

import pytest

from conftest import S
from iel.calculus import Calculus, check_proof
from iel.export import dumps, from_document, loads, to_document, to_latex, to_text
from iel.prover import prove


@pytest.mark.parametrize("text", ["|- K(p->q)->(Kp->Kq)", "p, Kp, Kq |- K(p & q)", "|- ~K_|_"])
def test_json_round_trip(text):
    t = prove(S(text)).proof
    assert loads(dumps(t)) == t
    assert from_document(json.loads(json.dumps(to_document(t)))) == t


def test_document_fields():
    doc = to_document(prove(S("p, Kp, Kq |- K(p & q)")).proof)
    assert set(doc) == {"conclusion", "rule", "annotation", "premises"}
    assert doc["rule"] == "KI1w"
    assert doc["annotation"] == {"delta1": ["p"], "delta2": ["q"]}


def test_loads_accepts_prover_record():
    t = prove(S("|- p -> p")).proof
    record = json.dumps({"status": "PROVED", "proof": to_document(t)})
    assert loads(record) == t


@pytest.mark.parametrize("bad", ["not json", '{"rule": "Ax"}', '{"conclusion": "p |- p", "rule": "W"}'])
def test_loads_rejects_malformed(bad):
    with pytest.raises(ValueError):
        loads(bad)


def test_text_and_latex():
    t = prove(S("K_|_ |- _|_")).proof
    text = to_text(t)
    assert text.splitlines()[0].startswith("K_|_ |- _|_")
    assert "[U]" in text
    latex = to_latex(t)
    assert latex.startswith(r"\begin{prooftree}") and latex.rstrip().endswith(r"\end{prooftree}")
    # one inference per node
    assert latex.count("InfC") == sum(1 for _ in t.nodes())


def test_loaded_document_checks():
    t = loads(dumps(prove(S("Kg |- KKg")).proof))
    assert check_proof(Calculus.IELG_PLUS_PLUS, t)
