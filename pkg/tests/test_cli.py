import json

import pytest

from detdim.cli import main
from detdim.families import complete, g_r
from detdim.graph import emit_graph6


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_lambda_on_g6(tmp_path, capsys):
    f = tmp_path / "g6.g6"
    f.write_text(emit_graph6(g_r(6)) + "\n")
    code, out, _ = run(["compute", "lambda", str(f)], capsys)
    row = json.loads(out)
    assert code == 0 and row["value"] == 7 and len(row["witness"]) == 7


def test_compute_det_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["compute", "det"], capsys, emit_graph6(complete(4)), monkeypatch)
    assert code == 0 and json.loads(out)["value"] == 3


@pytest.mark.parametrize("inv", ["dim", "gamma", "gamma-k", "Gamma", "alpha", "omega", "chi", "alpha-prime"])
def test_compute_targets(inv, capsys, monkeypatch):
    code, out, _ = run(["compute", inv, "--format", "tsv"], capsys, "Ch\n", monkeypatch)
    assert code == 0 and out.splitlines()[1].startswith("0\tCh\t")


def test_compute_greedy(capsys, monkeypatch):
    code, out, _ = run(["compute", "greedy", "--seed-vertex", "0"], capsys, "Ch\n", monkeypatch)
    row = json.loads(out)
    assert (row["a"], row["b"], row["c"]) == ([0], [1], [2, 3])
    code, out, _ = run(["compute", "greedy", "--all-seeds"], capsys, "Ch\n", monkeypatch)
    row = json.loads(out)
    assert len(row["seeds"]) == 4 and row["ld_size_max"] <= 3


def test_exit_codes(capsys, monkeypatch):
    assert run(["compute", "dim"], capsys, "3\n0 1\n", monkeypatch)[0] == 3
    assert run(["compute", "dim"], capsys, "C!\n", monkeypatch)[0] == 2
    assert run(["compute", "lambda", "--cap", "5"], capsys, emit_graph6(g_r(6)), monkeypatch)[0] == 4
    assert run(["verify", "thm-0.0"], capsys)[0] == 2
    assert run(["families", "gen", "T_r", "3"], capsys)[0] == 2


def test_verify_and_plot(tmp_path, capsys):
    png = tmp_path / "r.png"
    code, out, err = run(["verify", "lemma-2.1", "--r", "6", "--plot", str(png)], capsys)
    assert code == 0 and png.stat().st_size > 0
    summary = json.loads(out.splitlines()[-1])
    assert summary["pass"] == 6 and summary["fail"] == 0
    assert "6 pass" in err


def test_verify_random_corpus_flags(capsys):
    code, out, _ = run(["verify", "thm-5.3", "--corpus", "random-twinfree", "--n", "15", "--count", "20",
                        "--seed-vertex", "0"], capsys)
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines[0]["params"]["corpora"][0] == {
        "kind": "random-twinfree", "n_min": 15, "n_max": 15, "count": 20, "seed": 0}
    assert all(x["values"]["ld_size_max"] <= 11 for x in lines[1:-1])


def test_verify_list(capsys):
    code, out, _ = run(["verify", "--list"], capsys)
    assert code == 0 and "thm-4.2" in out


def test_families(capsys):
    code, out, _ = run(["families", "gen", "G_r", "6"], capsys)
    assert out.strip() == emit_graph6(g_r(6))
    code, out, _ = run(["families", "gen", "T_qs", "7", "0", "--format", "edgelist", "--labels"], capsys)
    assert out.splitlines()[0] == "49" and "# labels" in out
    code, out, _ = run(["families", "list"], capsys)
    assert "WHEEL" in out


def test_corpus_extremes_cli(tmp_path, capsys):
    png = tmp_path / "e.png"
    code, out, _ = run(["corpus-extremes", "--corpus", "all-connected-n5", "--plot", str(png)], capsys)
    summary = json.loads(out.splitlines()[-1])
    assert code == 0 and summary["n"] == 5 and png.exists()


def test_corpus_extremes_mixed(capsys, monkeypatch):
    assert run(["corpus-extremes"], capsys, "Ch\nDhc\n", monkeypatch)[0] == 3


def test_find_ore_witness_cli(capsys):
    code, out, _ = run(["find-ore-witness", "6"], capsys)
    row = json.loads(out)
    assert code == 0 and row["found"] and row["witness"]["n"] <= 6
    code, out, _ = run(["find-ore-witness", "4", "--format", "tsv"], capsys)
    assert out.startswith("# no witness")
