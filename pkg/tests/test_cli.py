import json

import pytest

from bridgelab.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_awkward_exactly(capsys):
    code, out, _ = run(capsys, "awkward", "--k", "3", "--variant", "exactly")
    assert code == 0
    assert "P=1/2" in out and "E[frag]=3/2" in out


def test_verify_forests_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--class", "forests", "--nmax", "6")
    assert code == 0
    assert "FAIL" not in out


def test_seq_text(capsys):
    code, out, _ = run(capsys, "seq", "--name", "forests-unlabelled", "--nmax", "7")
    assert code == 0
    assert out == "1..7: 1 2 3 6 10 20 37\n"


def test_seq_bfile(capsys, tmp_path):
    path = tmp_path / "b.txt"
    code, _, _ = run(capsys, "seq", "--name", "trees", "--nmax", "5", "--format", "bfile", "--out", str(path))
    assert code == 0
    assert path.read_text() == "1 1\n2 1\n3 1\n4 2\n5 3\n"


def test_enumerate_jsonl_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "sets" / "b.jsonl"
    run(capsys, "enumerate", "--class", "forests", "--n", "6", "--out", str(a))
    run(capsys, "enumerate", "--class", "forests", "--n", "6", "--out", str(b), "--jobs", "2")
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert len(lines) == 20
    assert set(json.loads(lines[0])) == {"code", "n", "edges", "aut"}


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--class", "cycles==3", "--nmax", "6")
    assert code == 0
    assert out.splitlines()[-1] == "6,2,1,2,100,90"


def test_codec_roundtrip(capsys, tmp_path):
    emit = tmp_path / "codewords.jsonl"
    code, out, _ = run(capsys, "codec", "--class", "forests", "--n", "6", "--roundtrip", "--emit", str(emit))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,unlabelled_total,rooted_connected,unlabelled_connected,bound,roundtrip"
    assert lines[5] == "5,10,9,3,pass,pass"
    assert len(emit.read_text().splitlines()) == 20


def test_codec_single_graph(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("4\n0 1\n2 3\n")
    code, out, _ = run(capsys, "codec", "--class", "forests", "--graph", str(g))
    assert code == 0
    assert "b=1" in out and "roundtrip=pass" in out


def test_tau_and_renyi(capsys):
    code, out, _ = run(capsys, "tau", "--n", "5")
    assert code == 0 and "ratio=3/10" in out
    code, out, _ = run(capsys, "renyi", "--n", "3")
    assert code == 0 and "ratio=3/7" in out


def test_frag_json(capsys):
    code, out, _ = run(capsys, "frag", "--class", "forests", "--nmax", "3", "--model", "labelled", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["rows"][2]["e_frag"]["num"] == "5"


@pytest.mark.parametrize("argv", [
    ["count", "--class", "forests", "--nmax", "11"],
    ["count", "--class", "all", "--nmax", "8"],
    ["enumerate", "--class", "planar", "--n", "3"],
    ["seq", "--name", "bogus", "--nmax", "3"],
    ["tau", "--n", "1001"],
    ["codec", "--class", "forests"],
    ["awkward", "--k", "6", "--variant", "exactly"],
])
def test_usage_errors_exit_two(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejections
        code = exc.code
    _, err = capsys.readouterr()
    assert code == 2
    assert err


def test_cap_message_names_the_cap(capsys):
    code, _, err = run(capsys, "count", "--class", "forests", "--nmax", "11")
    assert code == 2 and "cap 10" in err


def test_every_subcommand_documents_caps():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    assert set(sub.choices) == {
        "enumerate", "count", "codec", "seq", "tau", "renyi", "frag", "verify", "awkward", "report",
    }
    for name, p in sub.choices.items():
        assert "cap" in p.format_help() or name == "report", name
