"""CLI surface: output formats, exit-code contract, JSON round-trips."""

import csv
import io
import json

import pytest

from sqzero import cli, counting
from sqzero.cli import main, polynomial_from_json_terms
from sqzero.qpoly import QLaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_polynomial_text(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "3", "--method", "closed")
        assert code == 0
        assert out.strip() == "-q + 2*q^2"

    def test_value_text(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "4", "--method", "closed", "--q", "2")
        assert code == 0
        assert out.strip() == "28"

    def test_recurrence_for_one(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "1", "--method", "recurrence")
        assert code == 0
        assert out.strip() == "1"

    @pytest.mark.parametrize("method", ["closed", "recurrence", "anna", "sumanna"])
    def test_methods_agree(self, capsys, method):
        code, out, _ = run(capsys, "compute", "--n", "6", "--method", method)
        assert code == 0
        assert out.strip() == str(counting.closed_form(6))

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "5", "--format", "json", "--q", "3")
        assert code == 0
        record = json.loads(out)
        assert record["n"] == 5 and record["method"] == "closed" and record["q"] == 3
        poly = polynomial_from_json_terms(record["polynomial"])
        assert str(poly) == str(counting.closed_form(5))
        assert record["value"] == str(counting.closed_form(5).eval_at(3))

    def test_csv_shape(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "3", "--q", "3", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "method", "q", "polynomial", "value"]
        assert rows[1] == ["3", "closed", "3", "-q + 2*q^2", "15"]

    def test_pure_evaluation_allows_any_positive_q(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "3", "--q", "6")
        assert code == 0
        assert out.strip() == str(2 * 36 - 6)

    def test_invalid_n(self, capsys):
        code, _, err = run(capsys, "compute", "--n", "0")
        assert code == 2
        assert "error" in err

    def test_unknown_method_is_usage_error(self, capsys):
        assert run(capsys, "compute", "--n", "3", "--method", "bogus")[0] == 2

    def test_missing_subcommand_is_usage_error(self, capsys):
        assert run(capsys)[0] == 2


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "8")
        assert code == 0
        assert "verify: PASS" in out
        assert "n=8: OK" in out

    def test_trivial_bound(self, capsys):
        assert run(capsys, "verify", "--n-max", "1")[0] == 0

    def test_invalid_bound(self, capsys):
        assert run(capsys, "verify", "--n-max", "0")[0] == 2

    def test_corrupted_engine_fails_with_located_diff(self, capsys, monkeypatch):
        real = counting.closed_form

        def corrupted(n):
            poly = real(n)
            return poly + QLaurentPoly({0: 1}) if n == 4 else poly

        monkeypatch.setattr(counting, "closed_form", corrupted)
        code, out, _ = run(capsys, "verify", "--n-max", "5")
        assert code == 1
        assert "MISMATCH n=4: closed" in out
        assert "verify: FAIL" in out
        assert "n=3: OK" in out


class TestOracle:
    def test_match_report(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "3", "--q", "2", "--workers", "1")
        assert code == 0
        assert "oracle count:  6" in out
        assert "formula value: 6" in out
        assert "MATCH" in out

    def test_two_by_two(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "2", "--q", "3", "--workers", "1")
        assert code == 0
        assert "oracle count:  3" in out

    def test_by_rank_report(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--n", "3", "--q", "2", "--by-rank", "--workers", "1"
        )
        assert code == 0
        assert "rank 0: count 1" in out
        assert "rank 1: count 5" in out

    def test_json_records(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--n", "3", "--q", "2", "--format", "json", "--workers", "1"
        )
        assert code == 0
        records = json.loads(out)
        assert [rec["method"] for rec in records] == ["oracle", "closed"]
        assert records[0]["value"] == records[1]["value"] == "6"

    def test_unsupported_q(self, capsys):
        code, _, err = run(capsys, "oracle", "--n", "4", "--q", "6")
        assert code == 2
        assert "not a supported prime power" in err

    def test_budget_refusal(self, capsys):
        code, _, err = run(
            capsys, "oracle", "--n", "6", "--q", "9", "--budget", "1000", "--workers", "1"
        )
        assert code == 2
        assert "enumeration budget exceeded" in err

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        real = counting.closed_form
        monkeypatch.setattr(
            counting, "closed_form", lambda n: real(n) + QLaurentPoly({0: 1})
        )
        code, out, _ = run(capsys, "oracle", "--n", "3", "--q", "2", "--workers", "1")
        assert code == 1
        assert "MISMATCH" in out


class TestLemma2:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "lemma2", "--m-max", "10")
        assert code == 0
        assert "lemma2: PASS" in out

    def test_zero_bound(self, capsys):
        assert run(capsys, "lemma2", "--m-max", "0")[0] == 0

    def test_negative_bound_is_usage_error(self, capsys):
        code, _, err = run(capsys, "lemma2", "--m-max", "-1")
        assert code == 2
        assert "error" in err


class TestTable:
    def test_csv_values_at_two(self, capsys):
        code, out, _ = run(capsys, "table", "--n-max", "4", "--q-list", "2", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "polynomial", "2"]
        assert [row[-1] for row in rows[1:]] == ["1", "2", "6", "28"]

    def test_single_row_text(self, capsys):
        code, out, _ = run(capsys, "table", "--n-max", "1")
        assert code == 0
        assert out.strip() == "n=1  1"

    def test_json_records(self, capsys):
        code, out, _ = run(capsys, "table", "--n-max", "3", "--format", "json")
        assert code == 0
        records = json.loads(out)
        assert len(records) == 3
        for n, record in zip((1, 2, 3), records):
            assert record["n"] == n
            assert record["method"] == "closed"
            assert "value" not in record
            rebuilt = polynomial_from_json_terms(record["polynomial"])
            assert str(rebuilt) == str(counting.closed_form(n))

    def test_json_with_q_list_emits_record_per_pair(self, capsys):
        code, out, _ = run(
            capsys, "table", "--n-max", "2", "--q-list", "2,3", "--format", "json"
        )
        assert code == 0
        records = json.loads(out)
        assert [(rec["n"], rec["q"]) for rec in records] == [(1, 2), (1, 3), (2, 2), (2, 3)]
        assert records[3]["value"] == "3"

    def test_bad_q_list_is_usage_error(self, capsys):
        assert run(capsys, "table", "--n-max", "3", "--q-list", "2,x")[0] == 2

    def test_invalid_bound(self, capsys):
        assert run(capsys, "table", "--n-max", "0")[0] == 2


class TestParserPlumbing:
    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_console_entry_point_matches_main(self):
        assert cli.build_parser().prog == "sqzero"
