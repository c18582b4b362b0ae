import io
import json

import pytest

from kkcrystals.cli import main


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_convert_partition_to_path(capsys):
    code, out, _ = run(["convert", '{"parts": [8, 6, 3, 1], "charge": 0}'],
                       capsys)
    assert code == 0
    assert json.loads(out) == {"shape": "L0", "n": 4, "steps": [3, 2, 2, 1]}


def test_convert_path_to_partition(capsys):
    code, out, _ = run(["convert", '{"shape": "L0", "n": 4, "steps": [3, 2, 2, 1]}'],
                       capsys)
    assert code == 0
    assert json.loads(out) == {"parts": [8, 6, 3, 1], "charge": 0}


def test_convert_empty_partition(capsys):
    code, out, _ = run(["convert", '{"parts": [], "charge": 0}'], capsys)
    assert code == 0
    assert json.loads(out) == {"shape": "L0", "n": 0, "steps": []}


def test_convert_comma_separated_parts(capsys):
    code, out, _ = run(["convert", "2", "--charge", "1"], capsys)
    assert code == 0
    assert json.loads(out) == {"shape": "L1", "n": 1, "steps": [1]}


def test_convert_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"parts": [1], "charge": 0}'))
    code, out, _ = run(["convert"], capsys)
    assert code == 0
    assert json.loads(out) == {"shape": "L0", "n": 1, "steps": []}


def test_convert_rejects_non_regular(capsys):
    code, _, err = run(["convert", '{"parts": [2, 2], "charge": 0}'], capsys)
    assert code == 2
    assert "regular" in err


def test_convert_rejects_malformed_json(capsys):
    code, _, err = run(["convert", '{"parts": [2, 2'], capsys)
    assert code == 2
    assert "JSON" in err


def test_convert_round_trip(capsys):
    source = '{"parts": [5, 4, 2], "charge": 1}'
    _, out, _ = run(["convert", source], capsys)
    _, back, _ = run(["convert", out.strip()], capsys)
    assert json.loads(back) == json.loads(source)


def test_decompose_tsv(capsys):
    code, out, _ = run(["decompose", "--lambda", "0", "--p", "3",
                        "--cutoff", "4"], capsys)
    assert code == 0
    assert out == ("n\ta_n\tb_n\n"
                   "0\t1\t1\n"
                   "1\t0\t1\n"
                   "2\t1\t0\n"
                   "3\t0\t0\n"
                   "4\t0\t0\n")


def test_decompose_trivial_case(capsys):
    code, out, _ = run(["decompose", "--lambda", "0", "--p", "0",
                        "--cutoff", "0"], capsys)
    assert code == 0
    assert out == "n\ta_n\tb_n\n0\t1\t0\n"


def test_decompose_json_with_oracle(capsys):
    code, out, _ = run(["decompose", "--lambda", "1", "--p", "4",
                        "--cutoff", "5", "--format", "json", "--oracle"],
                       capsys)
    assert code == 0
    data = json.loads(out)
    assert data["a"] == [1, 1, 1, 1, 0, 0]
    assert data["oracle_agreement"] is True
    assert "b" not in data


def test_decompose_rejects_bad_parity(capsys):
    code, _, err = run(["decompose", "--lambda", "1", "--p", "1",
                        "--cutoff", "2"], capsys)
    assert code == 2
    assert "even" in err


def test_graph_stdout(capsys):
    code, out, _ = run(["graph", "--lambda", "0", "--p", "0",
                        "--max-boxes", "0"], capsys)
    assert code == 0
    assert "digraph" in out
    assert out.rstrip().endswith("vertices 1 edges 0")


def test_graph_to_file(tmp_path, capsys):
    target = tmp_path / "crystal.dot"
    code, out, _ = run(["graph", "--lambda", "0", "--p", "3",
                        "--max-boxes", "4", "--out", str(target)], capsys)
    assert code == 0
    assert out.strip() == "vertices 21 edges 17"
    text = target.read_text(encoding="utf-8")
    assert text.startswith("digraph") and text.count("->") == 17


def test_graph_second_family_counts(tmp_path, capsys):
    target = tmp_path / "crystal.dot"
    code, out, _ = run(["graph", "--lambda", "1", "--p", "2",
                        "--max-boxes", "4", "--out", str(target)], capsys)
    assert code == 0
    assert out.strip() == "vertices 20 edges 18"


def test_graph_unwritable_path(tmp_path, capsys):
    code, _, err = run(["graph", "--lambda", "0", "--p", "0",
                        "--max-boxes", "0",
                        "--out", str(tmp_path / "missing" / "x.dot")], capsys)
    assert code == 3
    assert "cannot write" in err


def test_enumerate(capsys):
    code, out, _ = run(["enumerate", "--charge", "0", "--max-boxes", "3"],
                       capsys)
    assert code == 0
    assert out.splitlines() == ["(∅ | c=0)", "(1 | c=0)", "(2 | c=0)",
                                "(3 | c=0)", "(2,1 | c=0)"]


def test_enumerate_json(capsys):
    code, out, _ = run(["enumerate", "--charge", "1", "--max-boxes", "1",
                        "--format", "json"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"parts": [], "charge": 1}, {"parts": [1], "charge": 1}]


def test_verify_passes_at_small_scale(capsys):
    code, out, _ = run(["verify", "bruhat", "--len-max", "5",
                        "--index-max", "6"], capsys)
    assert code == 0
    assert all(line.startswith("ok") for line in out.splitlines())


def test_verify_json_report(capsys):
    code, out, _ = run(["verify", "signatures", "--max-boxes", "6", "--json"],
                       capsys)
    assert code == 0
    report = json.loads(out)
    assert all(entry["ok"] for entry in report)
    assert all(entry["cases"] > 0 for entry in report)


def test_deterministic_output(capsys):
    first = run(["decompose", "--lambda", "0", "--p", "5", "--cutoff", "6"],
                capsys)
    second = run(["decompose", "--lambda", "0", "--p", "5", "--cutoff", "6"],
                 capsys)
    assert first == second
    g1 = run(["graph", "--lambda", "1", "--p", "2", "--max-boxes", "3"], capsys)
    g2 = run(["graph", "--lambda", "1", "--p", "2", "--max-boxes", "3"], capsys)
    assert g1 == g2


def test_missing_subcommand_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
