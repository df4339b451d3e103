import json

import pytest

from zipfbenford.cli import main
from zipfbenford.freq_table import build_frequency_table
from zipfbenford.zipf_fit import sample_zipf_table


@pytest.fixture
def synth_file(tmp_path):
    out = tmp_path / "syn.txt"
    assert main(["synth", "--n", "500", "--total", "50000", "--alpha", "1.0", "--seed", "3",
                 "--out", str(out)]) == 0
    return out


def test_synth_reproduces_sampler(synth_file):
    tokens = synth_file.read_text().split()
    assert build_frequency_table(tokens) == sample_zipf_table(500, 50000, 1.0)


def test_synth_seed_changes_order_only(tmp_path, synth_file):
    other = tmp_path / "other.txt"
    main(["synth", "--n", "500", "--total", "50000", "--seed", "4", "--out", str(other)])
    assert other.read_text() != synth_file.read_text()
    assert sorted(other.read_text().split()) == sorted(synth_file.read_text().split())


def test_analyze_input(synth_file, tmp_path, capsys):
    out = tmp_path / "out"
    code = main(["analyze", "--input", str(synth_file), "--mode", "natural", "--fold", "lower",
                 "--breakpoints", "12,33,max", "--out", str(out)])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    (row,) = doc["corpora"]
    assert row["label"] == "syn"
    assert row["unique_count"] == 500
    assert [seg["window"] for seg in row["segment_fits"]] == ["12:33", "34:500"]
    assert doc["amalgamated"]["r_benford"] == row["r_benford"]
    assert sorted(p.name for p in out.iterdir()) == [
        "run.summary.json", "syn.digits.tsv", "syn.loglog.tsv", "syn.rankfreq.tsv",
        "syn.summary.json", "syn.zipf.tsv",
    ]


def test_analyze_manifest(synth_file, tmp_path, capsys):
    src = tmp_path / "Main.java"
    src.write_text("class A { int f(int x) { return x + 1; } } // c\n" * 3)
    manifest = tmp_path / "m.tsv"
    manifest.write_text(f"syn\tnatural\tutf8\t{synth_file.name}\njava\tjava\tMain.java\n")
    code = main(["analyze", "--manifest", str(manifest), "--format", "tsv",
                 "--full-window", "1:5", "--drop-top", "2", "--dropped-window", "3:8"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert [ln.split("\t")[0] for ln in lines] == ["label", "syn", "java", "amalgamated"]


def test_dump_tokens(tmp_path, capsys):
    src = tmp_path / "a.cpp"
    src.write_text("a = a + a; // hi\nb = 1;\n")
    code = main(["analyze", "--input", str(src), "--mode", "cpp", "--dump-tokens", "-",
                 "--full-window", "1:3", "--drop-top", "0", "--dropped-window", "1:4"])
    assert code == 0
    assert capsys.readouterr().out.splitlines() == ["A", "=", "A", "+", "A", ";", "B", "=", "1", ";"]


def exit_code(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


@pytest.mark.parametrize("argv,code", [
    (["analyze", "--input", "x.txt"], 1),
    (["analyze", "--manifest", "m.tsv", "--input", "x.txt"], 1),
    (["analyze", "--input", "x.txt", "--mode", "natural", "--full-window", "5"], 1),
    (["analyze", "--input", "x.txt", "--mode", "natural", "--drop-top", "-1"], 1),
    (["analyze", "--manifest", "missing.tsv"], 1),
    (["frobnicate"], 1),
    (["analyze", "--input", "missing.txt", "--mode", "natural"], 2),
])
def test_exit_codes(argv, code, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert exit_code(argv) == code


def test_analysis_error_exit_code(tmp_path, capsys):
    p = tmp_path / "tiny.txt"
    p.write_text("a b a")
    assert main(["analyze", "--input", str(p), "--mode", "natural"]) == 3
    assert "[tiny] zipf_full" in capsys.readouterr().err


def test_undecodable_exit_code(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_bytes(b"\xff\xfe\xfa")
    assert main(["analyze", "--input", str(p), "--mode", "natural"]) == 2


class TestDigits:
    def test_tsv(self, tmp_path, capsys):
        p = tmp_path / "counts.txt"
        p.write_text("10622\n5286\n4415\n3946\n3823\n3347\n3100\n2147\n1938\n1934\n")
        assert main(["digits", "--input", str(p)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "digit\tempirical_proportion\tbenford_proportion"
        assert out[1] == "1\t0.300000\t0.301030"
        assert out[3] == "3\t0.400000\t0.124939"
        assert "# n_items\t10" in out

    def test_json(self, tmp_path, capsys):
        p = tmp_path / "counts.txt"
        p.write_text("1\n1\n25\n7\n")
        assert main(["digits", "--input", str(p), "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n_items"] == 4 and doc["pct_leading_1"] == 50.0

    @pytest.mark.parametrize("content", ["1\n0\n", "1\nabc\n"])
    def test_bad_values(self, tmp_path, content):
        p = tmp_path / "counts.txt"
        p.write_text(content)
        assert main(["digits", "--input", str(p)]) == 2

    def test_missing(self, tmp_path):
        assert main(["digits", "--input", str(tmp_path / "none")]) == 2
