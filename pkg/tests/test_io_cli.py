import json

import pytest

from hilbert_ext import enrich, validate
from hilbert_ext.cli import main
from hilbert_ext.io import (
    AlgebraDocument,
    DocumentError,
    MorphismDocument,
    emit,
    load_algebra,
    load_morphism,
    parse_algebra,
    parse_morphism,
    write,
)

H3_DOC = {"name": "H3", "variety": "hil", "size": 3, "one": 0, "arrow": [[0, 1, 2], [0, 0, 2], [0, 1, 0]]}


@pytest.fixture
def files(tmp_path, H3, G4):
    write(tmp_path / "h3.json", AlgebraDocument(H3))
    write(tmp_path / "g4.json", AlgebraDocument(G4))
    (tmp_path / "f.json").write_text(json.dumps({"dom": "h3.json", "cod": "g4.json", "map": [0, 2, 3], "tag": "hil"}))
    return tmp_path


def test_h3_document_parses_and_validates(H3):
    doc = parse_algebra(json.dumps(H3_DOC))
    assert doc.algebra.arrow == H3.arrow
    assert validate(doc.algebra, doc.variety).ok


def test_round_trip(G4):
    text = emit(AlgebraDocument(G4))
    assert emit(parse_algebra(text)) == text
    rich = enrich(G4, "hils")
    text = emit(AlgebraDocument(rich, "hils"))
    assert emit(parse_algebra(text)) == text
    plain = json.dumps(H3_DOC)
    assert json.loads(emit(parse_algebra(plain))) == H3_DOC


def test_morphism_round_trip(files, f):
    doc = load_morphism(files / "f.json")
    assert doc.morphism == f
    assert json.loads(emit(doc)) == json.loads((files / "f.json").read_text())
    embedded = emit(MorphismDocument(f))
    assert emit(parse_morphism(embedded)) == embedded


def test_out_of_range_entry_has_a_location():
    bad = dict(H3_DOC, arrow=[[0, 1, 2], [0, 0, 3], [0, 1, 0]])
    with pytest.raises(DocumentError) as err:
        parse_algebra(json.dumps(bad))
    assert err.value.location == "<string>.arrow[1][2]"
    assert "out of range" in str(err.value)


def test_malformed_json_has_line_and_column():
    with pytest.raises(DocumentError) as err:
        parse_algebra('{"size": 3,\n  "one": }', "doc.json")
    assert err.value.location.startswith("doc.json:2:")


def test_variety_mismatch():
    with pytest.raises(DocumentError, match="variety mismatch") as err:
        parse_algebra(json.dumps(dict(H3_DOC, variety="ghey")))
    assert err.value.location.endswith(".variety")
    with pytest.raises(DocumentError, match="variety"):
        parse_algebra(json.dumps(dict(H3_DOC, variety="lattice")))


def test_morphism_document_errors(files):
    doc = {"dom": "h3.json", "cod": "g4.json", "map": [0, 2, 2], "tag": "hil"}
    with pytest.raises(DocumentError, match="not a hil morphism"):
        parse_morphism(json.dumps(doc), base=files)
    doc["map"] = [0, 2, 4]
    with pytest.raises(DocumentError) as err:
        parse_morphism(json.dumps(doc), base=files)
    assert err.value.location == "<string>.map[2]"
    doc["map"], doc["tag"] = [0, 2, 3], "ghey"
    with pytest.raises(DocumentError, match="variety mismatch"):
        parse_morphism(json.dumps(doc), base=files)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_extend(files, capsys):
    code, out, _ = run(capsys, "extend", str(files / "h3.json"), "--target", "is")
    assert code == 0 and "size 4" in out
    code, out, _ = run(capsys, "extend", str(files / "h3.json"), "--target", "dagger", "--emit", str(files / "d.json"))
    assert code == 0 and "size 5" in out
    assert load_algebra(files / "d.json").algebra.size == 5


def test_cli_validate(files, capsys):
    code, out, _ = run(capsys, "validate", str(files / "g4.json"), "--variety", "hils")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "validate", str(files / "g4.json"), "--variety", "is")
    assert code == 1 and out.startswith("FAIL")


def test_cli_validate_reports_axioms(tmp_path, capsys):
    (tmp_path / "bad.json").write_text(json.dumps(dict(H3_DOC, arrow=[[0, 1, 2], [0, 0, 0], [0, 0, 0]])))
    code, out, _ = run(capsys, "validate", str(tmp_path / "bad.json"))
    assert code == 1 and "FAIL" in out and "->" in out


def test_cli_dual(files, capsys):
    code, out, _ = run(capsys, "dual", str(files / "g4.json"))
    assert code == 0
    assert "3 irreducible filters" in out
    assert "P0 = {1}  covered by P1, P2" in out
    assert "c -> {P1,P2}" in out


def test_cli_lift(files, capsys):
    code, out, _ = run(capsys, "lift", str(files / "f.json"), "--target", "is", "--emit", str(files / "l.json"))
    assert code == 0 and "map [0, 1, 2, 4]" in out and "intertwining: PASS" in out
    lifted = load_morphism(files / "l.json").morphism
    assert lifted.dom.size == 4 and lifted.cod.size == 5
    code, _, err = run(capsys, "lift", str(files / "f.json"), "--target", "ghey")
    assert code == 2 and "error" in err


def test_cli_enumerate(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--variety", "hil", "--size", "4", "--emit", str(tmp_path / "cat"))
    assert code == 0
    assert "size 3: 2" in out and "size 4: 6" in out and "total: 10" in out
    assert len(list((tmp_path / "cat").glob("*.json"))) == 10
    code, _, err = run(capsys, "enumerate", "--variety", "hil", "--size", "9")
    assert code == 2 and "cap" in err


def test_cli_verify(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--max-size", "3", "--out", str(tmp_path))
    assert code == 0 and "FAIL" not in out and "all checks passed" in out


def test_cli_usage_errors(files, capsys):
    code, _, err = run(capsys, "extend", str(files / "h3.json"), "--target", "bogus")
    assert code == 2
    code, _, err = run(capsys, "validate", str(files / "missing.json"))
    assert code == 2 and "cannot read" in err
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_cli_is_deterministic(files, capsys):
    first = run(capsys, "dual", str(files / "h3.json"))
    second = run(capsys, "dual", str(files / "h3.json"))
    assert first == second


def test_cli_verify_writes_counterexamples(tmp_path, capsys, monkeypatch, f):
    from hilbert_ext import cli
    from hilbert_ext.verify import check_hat_g

    monkeypatch.setitem(cli.SUITES, "duality", lambda max_size: [check_hat_g([f.dom, f.cod], ops=("join",))])
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--max-size", "3", "--out", str(tmp_path))
    assert code == 1 and "FAIL" in out and "counterexample" in out
    dumped = sorted(tmp_path.glob("duality-*.json"))
    assert dumped
    again = load_morphism(dumped[0]).morphism
    assert not check_hat_g([again.dom, again.cod], ops=("join",)).ok
