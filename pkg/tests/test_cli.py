"""Command-line behavior: outputs, formats, exit codes."""

import csv
import io
import json

import pytest

from twindex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_edgelist(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "path:3")
        assert code == 0
        assert out == "3\n0 1\n1 2\n"

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "wheel:5", "--format", "dot")
        assert code == 0
        assert out.startswith("graph G {")

    def test_to_file(self, capsys, tmp_path):
        target = tmp_path / "g.json"
        code, out, _ = run(capsys, "gen", "--family", "power:Z6", "--format", "json", "--out", str(target))
        assert code == 0 and out == ""
        data = json.loads(target.read_text())
        assert data["n"] == 6
        assert data["labels"] == ["0", "1", "2", "3", "4", "5"]

    def test_bad_family_is_usage_error(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "nosuch:3")
        assert code == 2
        assert "nosuch" in err


class TestTwins:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "twins", "--family", "power:Z6")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "3 twin classes"
        assert lines[1] == "0 complete: 0 1 5"
        assert lines[3] == "2 singleton: 3"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "twins", "--family", "power:Q8", "--json")
        assert code == 0
        record = json.loads(out)
        assert record["num_classes"] == 4
        assert record["classes"][0]["members"] == ["1", "a2"]

    def test_emit_reduced(self, capsys, tmp_path):
        target = tmp_path / "h.edgelist"
        code, _, _ = run(
            capsys, "twins", "--family", "power:Z6", "--emit-reduced", str(target)
        )
        assert code == 0
        assert target.read_text() == "3\n0 1\n0 2\n"

    def test_graph_from_file(self, capsys, tmp_path):
        source = tmp_path / "g.txt"
        source.write_text("4\n0 1\n0 2\n0 3\n")
        code, out, _ = run(capsys, "twins", "--in", str(source))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "2 twin classes"
        assert lines[2] == "1 empty: 1 2 3"

    def test_missing_input(self, capsys):
        code, _, err = run(capsys, "twins")
        assert code == 2
        assert "--family or --in" in err


class TestIndex:
    def test_reduced_value(self, capsys):
        code, out, _ = run(capsys, "index", "--family", "power:Z6", "--m", "3", "--method", "reduced")
        assert code == 0
        assert out == "41\n"

    def test_naive_value(self, capsys):
        code, out, _ = run(capsys, "index", "--family", "power:D12", "--m", "2", "--method", "naive")
        assert code == 0
        assert out == "113\n"

    def test_json_record_naive(self, capsys):
        code, out, _ = run(
            capsys, "index", "--family", "power:Z6", "--m", "3", "--method", "naive", "--json"
        )
        assert code == 0
        record = json.loads(out)
        assert record["value"] == "41"
        assert record["method"] == "naive"
        assert record["m"] == 3
        assert record["elapsed_ms"] >= 0
        assert "num_profiles" not in record

    def test_json_record_reduced_diagnostics(self, capsys):
        code, out, _ = run(
            capsys, "index", "--family", "power:Z6", "--m", "3", "--method", "reduced", "--json"
        )
        record = json.loads(out)
        assert code == 0
        assert record["value"] == "41"
        assert record["num_classes"] == 3
        assert record["num_profiles"] == 5
        assert record["dh_cache_hits"] >= 1

    def test_closed_form_multipartite(self, capsys):
        code, out, _ = run(
            capsys, "index", "--family", "multipartite:3,3,3", "--m", "5", "--method", "closed_form"
        )
        assert code == 0
        assert out == "504\n"

    def test_closed_form_needs_multipartite(self, capsys):
        code, _, err = run(
            capsys, "index", "--family", "wheel:5", "--m", "2", "--method", "closed_form"
        )
        assert code == 2
        assert "multipartite" in err

    def test_methods_agree_across_families(self, capsys):
        for family in ["power:Z6", "power:Q8", "comax:Z6", "wheel:5", "izdg:Z24:I=(8)"]:
            for m in (2, 3):
                _, naive, _ = run(capsys, "index", "--family", family, "--m", str(m), "--method", "naive")
                _, reduced, _ = run(capsys, "index", "--family", family, "--m", str(m), "--method", "reduced")
                assert naive == reduced, (family, m)

    def test_disconnected_is_computation_error(self, capsys, tmp_path):
        source = tmp_path / "g.txt"
        source.write_text("4\n0 1\n")
        code, _, err = run(capsys, "index", "--in", str(source), "--m", "2")
        assert code == 1
        assert "connected" in err

    def test_threads_flag(self, capsys):
        code, out, _ = run(
            capsys, "index", "--family", "power:Z12", "--m", "3", "--method", "naive", "--threads", "2"
        )
        assert code == 0
        assert out.strip() == run(capsys, "index", "--family", "power:Z12", "--m", "3")[1].strip()

    def test_threads_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("TWINDEX_THREADS", "2")
        code, out, _ = run(capsys, "index", "--family", "power:Z6", "--m", "3")
        assert code == 0 and out == "41\n"
        monkeypatch.setenv("TWINDEX_THREADS", "zebra")
        code, _, err = run(capsys, "index", "--family", "power:Z6", "--m", "3")
        assert code == 2
        assert "TWINDEX_THREADS" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "index", "--in", "/no/such/file", "--m", "2")
        assert code == 2

    def test_stdin_input(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("3\n0 1\n1 2\n"))
        code, out, _ = run(capsys, "index", "--in", "-", "--m", "2", "--method", "naive")
        assert code == 0
        assert out == "4\n"

    def test_gen_output_feeds_index_input(self, capsys, tmp_path):
        target = tmp_path / "z6.json"
        assert run(capsys, "gen", "--family", "power:Z6", "--format", "json", "--out", str(target))[0] == 0
        code, out, _ = run(
            capsys, "index", "--in", str(target), "--format", "json", "--m", "3"
        )
        assert code == 0
        assert out == "41\n"

    def test_both_inputs_rejected(self, capsys, tmp_path):
        source = tmp_path / "g.txt"
        source.write_text("2\n0 1\n")
        code, _, err = run(capsys, "index", "--family", "path:3", "--in", str(source))
        assert code == 2
        assert "not both" in err


class TestBench:
    def test_csv_structure_and_agreement(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--family", "power:Z6", "--family", "wheel:5",
            "--m", "2,3", "--reps", "1",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 2 * 2 * 2  # families x m values x methods
        for row in rows:
            assert float(row["elapsed_ms"]) >= 0
        by_key = {}
        for row in rows:
            by_key.setdefault((row["family"], row["m"]), set()).add(row["value"])
        assert all(len(values) == 1 for values in by_key.values())

    def test_csv_to_file(self, capsys, tmp_path):
        target = tmp_path / "bench.csv"
        code, out, _ = run(
            capsys, "bench", "--family", "power:Z6", "--m", "3", "--reps", "1",
            "--out", str(target),
        )
        assert code == 0 and out == ""
        rows = list(csv.DictReader(target.open()))
        assert {row["method"] for row in rows} == {"naive", "reduced"}
        assert all(row["value"] == "41" for row in rows)


class TestVerify:
    def test_all_rows_pass(self, capsys):
        code, out, _ = run(capsys, "verify-paper")
        assert code == 0
        lines = out.splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1] == "11/11 checks passed"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--json")
        assert code == 0
        record = json.loads(out)
        assert record["failures"] == 0
        assert len(record["checks"]) == 11


class TestUsage:
    def test_no_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["index", "--family", "power:Z6", "--frobnicate"])
        assert exc.value.code == 2
