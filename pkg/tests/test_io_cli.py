import json

import pytest

from gammalab import cli
from gammalab.core import AxiomError, PoGammaStructure
from gammalab.enumerate import EnumConfig, random_structure
from gammalab.io import (ParseError, covers, hasse_dot, parse_many,
                         parse_structure, serialize_structure)

from conftest import left_zero, minimum_chain

S2 = "n 2\ng 1\nop 0\n0 0\n0 1\nleq\n1 1\n0 1\n"


def test_parse_s2():
    assert parse_structure(S2) == minimum_chain(2)
    assert serialize_structure(minimum_chain(2)) == S2


def test_comments_and_blank_lines():
    text = "# two-chain\nn 2   # size\n\ng 1\nop 0\n0 0\n0 1\nleq\n1 1\n0 1\n"
    assert parse_structure(text) == minimum_chain(2)


def test_shape_error_names_line():
    bad = S2.replace("0 0\n0 1\nleq", "0 0 1\n0 1\nleq")
    with pytest.raises(ParseError) as ei:
        parse_structure(bad)
    assert ei.value.line == 4
    assert "expected 2 entries, got 3" in str(ei.value)


def test_reflexivity_violation():
    bad = S2.replace("leq\n1 1\n0 1", "leq\n1 1\n0 0")
    with pytest.raises(AxiomError) as ei:
        parse_structure(bad)
    assert "reflexivity at (1,1)" in str(ei.value)
    s = parse_structure(bad, validate=False)
    assert not s.le(1, 1)


@pytest.mark.parametrize("text, fragment", [
    ("", "unexpected end"),
    ("n 2\ng 1\nop 0\n0 0\n", "missing row 1"),
    ("n x\n", "expected an integer"),
    ("n 2\ng 1\nop 0\n0 2\n0 1\nleq\n1 1\n0 1\n", "out of range"),
    ("n 2\ng 1\nop 1\n", "table label 1 out of range"),
    (S2 + "extra\n", "trailing content"),
    ("n 2\ng 1\nkind ring\n", "unknown kind"),
    ("g 1\n", "expected 'n'"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as ei:
        parse_structure(text)
    assert fragment in str(ei.value)


def test_n1_document():
    doc = serialize_structure(minimum_chain(1))
    assert doc == "n 1\ng 1\nop 0\n0\nleq\n1\n"
    assert parse_structure(doc) == minimum_chain(1)


def test_groupoid_round_trip():
    s = PoGammaStructure(2, 1, bytes([0, 1, 1, 0]), bytes([1, 0, 0, 1]), "groupoid")
    doc = serialize_structure(s)
    assert "kind groupoid" in doc
    assert parse_structure(doc) == s


def test_round_trip_corpus(mixed_corpus):
    for s in mixed_corpus:
        assert parse_structure(serialize_structure(s)) == s


def test_tables_out_of_order_labels():
    s = random_structure(EnumConfig(2, 2), 3)
    t0, t1 = s.tables()
    rows = lambda t: "\n".join(" ".join(map(str, r)) for r in t)
    lr = "\n".join(" ".join(map(str, r)) for r in s.order_rows())
    text = f"n 2\ng 2\nop 1\n{rows(t1)}\nop 0\n{rows(t0)}\nleq\n{lr}\n"
    assert parse_structure(text) == s


def test_parse_many():
    docs = parse_many(S2 + "---\n" + serialize_structure(left_zero(2)) + "---\n")
    assert docs == [minimum_chain(2), left_zero(2)]


def test_hasse():
    assert covers(minimum_chain(3)) == [(0, 1), (1, 2)]
    dot = hasse_dot(minimum_chain(2))
    assert dot.startswith("digraph hasse {") and "0 -> 1;" in dot
    assert "->" not in hasse_dot(left_zero(2))


# CLI

@pytest.fixture
def s2file(tmp_path):
    p = tmp_path / "s2.pgs"
    p.write_text(S2)
    return str(p)


@pytest.fixture
def chain3file(tmp_path, chain3):
    p = tmp_path / "c3.pgs"
    p.write_text(serialize_structure(chain3))
    return str(p)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_validate(capsys, s2file, tmp_path):
    code, out, _ = run(capsys, "validate", s2file)
    assert code == 0 and out.strip() == "valid po-Γ-semigroup, n=2 g=1"
    bad = tmp_path / "bad.pgs"
    bad.write_text(S2.replace("0 1\n", "1 0\n", 1))
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 1
    code, out, _ = run(capsys, "validate", str(bad), "--json")
    assert code == 1 and json.loads(out)["valid"] is False


def test_cli_filters(capsys, s2file):
    code, out, _ = run(capsys, "filters", s2file, "--element", "0")
    assert code == 0
    assert "N(0)={0,1}" in out and "[0)={0,1}" in out and "filters: {1} {0,1}" in out
    code, out, _ = run(capsys, "filters", s2file, "--json")
    data = json.loads(out)
    assert data["principal"] == {"0": [0, 1], "1": [1]} and data["all_filters"] == [[1], [0, 1]]


def test_cli_profile_nrel_congruences(capsys, chain3file):
    code, out, _ = run(capsys, "profile", chain3file, "--json")
    assert code == 0 and json.loads(out)["is_semilattice"] is True
    code, out, _ = run(capsys, "nrel", chain3file, "--json")
    assert json.loads(out)["partition"]["class_of"] == [0, 1, 2]
    code, out, _ = run(capsys, "congruences", chain3file)
    assert code == 0 and "smallest: " in out
    code, out, _ = run(capsys, "congruences", chain3file, "--complete", "--json")
    assert json.loads(out)["complete"] is True


def test_cli_quotient(capsys, chain3file):
    code, out, _ = run(capsys, "quotient", chain3file, "--partition", "0,1,1")
    assert code == 0 and "quotient validates: true" in out
    code, out, _ = run(capsys, "quotient", chain3file, "--partition", "0,1,0")
    assert code == 2
    code, out, _ = run(capsys, "quotient", chain3file, "--partition", "0,1")
    assert code == 1


def test_cli_claims(capsys, chain3file):
    code, out, _ = run(capsys, "claims", chain3file)
    assert code == 0 and out.count("\n") == 13
    code, out, _ = run(capsys, "claims", chain3file, "--claim", "C5", "--claim", "c4", "--json")
    data = json.loads(out)
    assert [v["claim_id"] for v in data] == ["C5", "C4"]
    code, _, err = run(capsys, "claims", chain3file, "--claim", "C42")
    assert code == 2 and "unknown claim" in err


def test_cli_search(capsys):
    code, out, _ = run(capsys, "search", "--claim", "C4", "--n", "3", "--g", "2", "--exhaustive", "--json")
    data = json.loads(out)
    assert code == 0 and data["structures_checked"] == 572 and "elapsed" not in data
    code2, out2, _ = run(capsys, "search", "--claim", "C4", "--n", "3", "--g", "2", "--exhaustive", "--json")
    assert out2 == out
    code, out, _ = run(capsys, "search", "--claim", "C12", "--n", "3", "--limit", "1")
    assert code == 0 and "showing first 1" in out
    code, out, _ = run(capsys, "search", "--claim", "C1", "--n", "5")
    assert code == 2
    code, out, _ = run(capsys, "search", "--claim", "C1", "--n", "3", "--random", "5", "--timing")
    assert code == 0 and "elapsed:" in out


def test_cli_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", "2")
    assert code == 0 and len(parse_many(out)) == 11
    code, out, _ = run(capsys, "gen", "--n", "3", "--g", "2", "--random", "4", "--out", str(tmp_path / "d"))
    files = sorted((tmp_path / "d").iterdir())
    assert code == 0 and len(files) == 4
    assert all(parse_structure(f.read_text()).g == 2 for f in files)


def test_cli_hasse_and_stdin(capsys, s2file, monkeypatch):
    import io
    code, out, _ = run(capsys, "hasse", s2file)
    assert code == 0 and "0 -> 1;" in out
    monkeypatch.setattr("sys.stdin", io.StringIO(S2))
    code, out, _ = run(capsys, "validate", "-")
    assert code == 0


def test_cli_usage_errors(capsys, tmp_path):
    for argv in (["frobnicate"], ["validate"], ["search", "--claim", "C1"]):
        with pytest.raises(SystemExit) as ei:
            cli.main(argv)
        assert ei.value.code == 2
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.pgs"))
    assert code == 1


def test_cli_json_stable(capsys, chain3file):
    outs = {run(capsys, "claims", chain3file, "--json")[1] for _ in range(3)}
    assert len(outs) == 1
