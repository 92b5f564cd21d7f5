"""Command line client: formats, exit codes, determinism, env seeding."""

import json

import jsonschema
import pytest

from chevalley.cli import main
from chevalley.service.schemas import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestExitCodes:
    def test_no_arguments_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_command_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_invalid_rank_is_usage_error(self, capsys):
        code, _ = run(capsys, "roots", "--type", "B", "--rank", "1")
        assert code == 2

    def test_missing_type_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["roots", "--rank", "2"])
        assert exc.value.code == 2

    def test_successful_run_is_zero(self, capsys):
        code, out = run(capsys, "roots", "--type", "A", "--rank", "2")
        assert code == 0
        assert out.startswith("# command=roots\n")

    def test_bad_word_letter_is_usage_error(self, capsys):
        code, _ = run(
            capsys, "torsion", "--type", "A", "--rank", "2", "--word", "7", "--samples", "2"
        )
        assert code == 2


class TestTsvFormat:
    def test_provenance_then_header_then_rows(self, capsys):
        _, out = run(capsys, "roots", "--type", "A", "--rank", "2", "--format", "tsv")
        lines = out.strip().split("\n")
        meta = [l for l in lines if l.startswith("# ")]
        table = [l for l in lines if not l.startswith("# ")]
        assert meta[0] == "# command=roots"
        assert all("=" in l for l in meta)
        assert table[0] == "coords\theight"
        assert len(table) == 1 + 6  # header + one row per root
        heights = [int(row.split("\t")[1]) for row in table[1:]]
        assert heights == sorted(heights)

    def test_torsion_summary_fields(self, capsys):
        _, out = run(
            capsys,
            "torsion", "--type", "B", "--rank", "2", "--samples", "3", "--format", "tsv",
        )
        assert "# word=[1,2]" in out
        assert "# weyl_order=4" in out
        assert "# verdict=all-finite-uniform" in out
        assert out.strip().endswith("4\t3")

    def test_approx_single_row(self, capsys):
        _, out = run(
            capsys,
            "approx", "--prime", "2", "--modulus", "3", "--lambda", "7", "--precision", "4",
        )
        assert "# mu=39" in out
        assert "# nu_diff=5" in out
        body = out.strip().split("\n")[-1]
        assert body.split("\t")[:3] == ["7", "39", "5"]


class TestJsonFormat:
    def test_single_response_validates(self, capsys):
        code, out = run(
            capsys,
            "relations", "--type", "G", "--rank", "2", "--samples", "3",
            "--format", "json",
        )
        assert code == 0
        body = json.loads(out)
        jsonschema.validate(body, load_schema("relations"))
        assert body["type_label"] == "G" and body["all_ok"] is True

    def test_sweep_envelope_validates(self, capsys):
        code, out = run(
            capsys, "roots", "--all-types", "--format", "json"
        )
        assert code == 0
        body = json.loads(out)
        jsonschema.validate(body, load_schema("sweep"))
        assert body["command"] == "roots"
        assert body["truncated"] is False
        assert len(body["results"]) == 7
        for entry in body["results"]:
            jsonschema.validate(entry, load_schema("roots"))

    def test_sweep_budget_truncates(self, capsys):
        code, out = run(
            capsys,
            "relations", "--all-types", "--samples", "2",
            "--budget-seconds", "0", "--format", "json",
        )
        body = json.loads(out)
        assert body["truncated"] is True
        assert len(body["results"]) < 7
        assert code == 0

    def test_json_is_sorted_and_newline_terminated(self, capsys):
        _, out = run(capsys, "roots", "--type", "A", "--rank", "1", "--format", "json")
        assert out.endswith("\n")
        body = json.loads(out)
        assert list(body) == sorted(body)


class TestDeterminism:
    @pytest.mark.parametrize("fmt", ["tsv", "json"])
    def test_repeat_runs_byte_identical(self, capsys, fmt):
        args = (
            "torsion-scan", "--type", "A", "--rank", "2", "--samples", "2",
            "--seed", "5", "--format", fmt,
        )
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        assert first == second

    def test_seed_changes_output(self, capsys):
        base = ("torsion", "--type", "A", "--rank", "2", "--samples", "4", "--format", "json")
        _, a = run(capsys, *base, "--seed", "1")
        _, b = run(capsys, *base, "--seed", "2")
        assert json.loads(a)["seed"] == 1
        assert json.loads(b)["seed"] == 2

    def test_env_seed_default(self, capsys, monkeypatch):
        monkeypatch.setenv("CHEVALLEY_SEED", "77")
        _, out = run(
            capsys, "relations", "--type", "A", "--rank", "1", "--samples", "2",
            "--format", "json",
        )
        assert json.loads(out)["seed"] == 77

    def test_flag_overrides_env_seed(self, capsys, monkeypatch):
        monkeypatch.setenv("CHEVALLEY_SEED", "77")
        _, out = run(
            capsys, "relations", "--type", "A", "--rank", "1", "--samples", "2",
            "--seed", "3", "--format", "json",
        )
        assert json.loads(out)["seed"] == 3


class TestOutputFile:
    def test_writes_file_instead_of_stdout(self, capsys, tmp_path):
        target = tmp_path / "roots.json"
        code, out = run(
            capsys,
            "roots", "--type", "A", "--rank", "2", "--format", "json",
            "--output", str(target),
        )
        assert code == 0
        assert out == ""
        body = json.loads(target.read_text())
        assert body["root_count"] == 6

    def test_word_parsing(self, capsys):
        _, out = run(
            capsys,
            "torsion", "--type", "A", "--rank", "2", "--word", "1,2,1",
            "--samples", "2", "--format", "json",
        )
        body = json.loads(out)
        assert body["word"] == [1, 2, 1]
        assert body["eigenvalue_one"] is True
