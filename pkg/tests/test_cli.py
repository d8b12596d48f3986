"""CLI tests: output formats, exit codes, JSON round-trips."""

import json

import pytest

from thetadim.cli import (
    EXIT_CERTIFICATION,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    OutputRecord,
    main,
)
from thetadim.verlinde import UnsupportedQuery, VerlindeQuery, gl_dim, sl_dim


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDim:
    def test_sl_text(self, capsys):
        code, out, _ = run_cli(capsys, "dim", "sl", "--genus", "2", "--rank", "2",
                               "--degree", "0", "--level", "1")
        assert code == EXIT_OK
        assert out == "4\n"

    def test_gl_text(self, capsys):
        code, out, _ = run_cli(capsys, "dim", "gl", "--genus", "3", "--rank", "1",
                               "--degree", "5", "--level", "2")
        assert code == EXIT_OK
        assert out == "8\n"

    def test_unsupported(self, capsys):
        code, _, err = run_cli(capsys, "dim", "sl", "--genus", "5", "--rank", "3",
                               "--degree", "7", "--level", "2")
        assert code == EXIT_UNSUPPORTED
        assert "unsupported: degree not ≡ 0 mod rank at genus ≥ 2" in err

    def test_certification_failure(self, capsys):
        code, _, err = run_cli(capsys, "dim", "sl", "--genus", "3", "--rank", "5",
                               "--degree", "0", "--level", "5",
                               "--max-precision-bits", "8")
        assert code == EXIT_CERTIFICATION
        assert "certification failed" in err

    def test_negative_degree_flag(self, capsys):
        code, out, _ = run_cli(capsys, "dim", "gl", "--genus", "2", "--rank", "2",
                               "--degree", "-6", "--level", "2")
        assert code == EXIT_OK
        assert out == "10\n"

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "dim", "sl", "--genus", "2", "--rank", "2",
                               "--degree", "0", "--level", "1", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload == {
            "query": {"genus": 2, "rank": 2, "degree": 0, "level": 1, "kind": "sl"},
            "value": "4",
            "method": "trig-sum",
            "certified": True,
        }

    def test_json_round_trip_over_grid(self, capsys):
        queries = [
            ("sl", 2, 2, 0, 1), ("sl", 1, 4, 2, 3), ("sl", 3, 1, 11, 9),
            ("gl", 2, 2, 2, 1), ("gl", 3, 1, 5, 2), ("gl", 2, 2, 0, 3),
        ]
        for kind, g, n, d, k in queries:
            code, out, _ = run_cli(capsys, "dim", kind, "--genus", str(g),
                                   "--rank", str(n), "--degree", str(d),
                                   "--level", str(k), "--format", "json")
            assert code == EXIT_OK
            record = OutputRecord.from_dict(json.loads(out))
            compute = sl_dim if kind == "sl" else gl_dim
            result = compute(VerlindeQuery(g, n, d, k))
            expected = OutputRecord(kind, g, n, d, k, str(result.value),
                                    result.method, result.certified)
            assert record == expected
            assert int(record.value) == result.value

    def test_genus_zero_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "dim", "sl", "--genus", "0", "--rank", "2",
                               "--degree", "0", "--level", "1")
        assert code == EXIT_USAGE
        assert "genus" in err


class TestCheck:
    def test_involution_pass(self, capsys):
        code, out, _ = run_cli(capsys, "check", "involution", "--max-rank", "4",
                               "--max-level", "4", "--genus-range", "1..3",
                               "--max-abs-degree", "4")
        assert code == EXIT_OK
        assert "PASS" in out

    def test_bott_szenes_pass(self, capsys):
        code, out, _ = run_cli(capsys, "check", "bott-szenes", "--max-rank", "3",
                               "--max-level", "3", "--genus-range", "2..2")
        assert code == EXIT_OK
        assert "0 failures" in out

    def test_theorem1_rank_one(self, capsys):
        code, _, _ = run_cli(capsys, "check", "theorem1", "--max-rank", "1",
                             "--max-level", "5", "--genus-range", "2..4",
                             "--max-abs-degree", "3")
        assert code == EXIT_OK

    def test_json_report_schema(self, capsys):
        code, out, _ = run_cli(capsys, "check", "theorem1", "--max-rank", "2",
                               "--max-level", "2", "--genus-range", "2..2",
                               "--max-abs-degree", "1", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["check"] == "theorem1"
        assert payload["instances_run"] == 8
        assert payload["skipped_unsupported"] == 4
        assert payload["failures"] == []

    def test_negative_control_exits_one(self, capsys):
        code, out, _ = run_cli(capsys, "check", "elliptic", "--max-rank", "2",
                               "--max-level", "2", "--negative-control")
        assert code == EXIT_CHECK_FAILED
        assert "FAIL" in out

    def test_bad_genus_range(self, capsys):
        code, _, _ = run_cli(capsys, "check", "involution", "--genus-range", "nope")
        assert code == EXIT_USAGE

    def test_unknown_check(self, capsys):
        code, _, _ = run_cli(capsys, "check", "wrong-name")
        assert code == EXIT_USAGE


class TestTable:
    def test_csv_matrix(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--genus", "2", "--max-rank", "2",
                               "--max-level", "3")
        assert code == EXIT_OK
        assert out.splitlines() == ["n\\k,1,2,3", "1,1,1,1", "2,4,10,20"]

    def test_genus_one_rows_are_binomials(self, capsys):
        import math
        code, out, _ = run_cli(capsys, "table", "--genus", "1", "--max-rank", "4",
                               "--max-level", "4")
        assert code == EXIT_OK
        rows = [line.split(",") for line in out.splitlines()[1:]]
        for row in rows:
            n = int(row[0])
            for k, cell in enumerate(row[1:], start=1):
                assert int(cell) == math.comb(n + k - 1, k)

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--genus", "2", "--max-rank", "2",
                               "--max-level", "3", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["genus"] == 2
        assert payload["rows"][1] == {"rank": 2, "values": ["4", "10", "20"]}

    def test_md_format(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--genus", "2", "--max-rank", "2",
                               "--max-level", "2", "--format", "md")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "| n\\k | 1 | 2 |"
        assert lines[2] == "| 1 | 1 | 1 |"
        assert lines[3] == "| 2 | 4 | 10 |"

    def test_bad_genus(self, capsys):
        code, _, _ = run_cli(capsys, "table", "--genus", "0")
        assert code == EXIT_USAGE


class TestFactor:
    def test_pullback_exact_output(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "pullback", "--n1", "2", "--d1", "0",
                               "--n2", "3", "--rkF", "1")
        assert code == EXIT_OK
        assert out == "theta^3 [x] theta{rank=2, det=L1^1.detF^2}\n"

    def test_jacobian_exact_output(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "jacobian", "--genus", "2",
                               "--rank", "2", "--degree", "0")
        assert code == EXIT_OK
        assert out == "exponent 2, constraint N^2 = L.detF^2, degree check 2 = 2\n"

    def test_rescale_exact_output(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "rescale", "--rkF", "2", "--rkF0", "1")
        assert code == EXIT_OK
        assert out == "a=2, twist=detF^1.detF0^-2\n"

    def test_precondition_violation_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "factor", "pullback", "--n1", "4", "--d1", "1",
                               "--n2", "3", "--rkF", "1")
        assert code == EXIT_UNSUPPORTED
        assert "precondition violated" in err

    def test_missing_flags_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "factor", "pullback", "--n1", "2")
        assert code == EXIT_USAGE
        assert "--d1" in err and "--n2" in err


class TestUsage:
    def test_unknown_command(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == EXIT_USAGE

    def test_missing_required_flag(self, capsys):
        assert run_cli(capsys, "dim", "sl", "--genus", "2")[0] == EXIT_USAGE

    def test_bad_format_choice(self, capsys):
        code, _, _ = run_cli(capsys, "dim", "sl", "--genus", "2", "--rank", "2",
                             "--degree", "0", "--level", "1", "--format", "yaml")
        assert code == EXIT_USAGE

    def test_every_documented_exit_code_reachable(self, capsys):
        # 0: success
        assert run_cli(capsys, "dim", "sl", "--genus", "2", "--rank", "2",
                       "--degree", "0", "--level", "1")[0] == EXIT_OK
        # 1: check failure (negative control)
        assert run_cli(capsys, "check", "elliptic", "--max-rank", "1",
                       "--max-level", "1", "--negative-control")[0] == EXIT_CHECK_FAILED
        # 2: unsupported input
        assert run_cli(capsys, "dim", "sl", "--genus", "4", "--rank", "3",
                       "--degree", "2", "--level", "1")[0] == EXIT_UNSUPPORTED
        # 3: certification failure
        assert run_cli(capsys, "dim", "sl", "--genus", "3", "--rank", "5",
                       "--degree", "0", "--level", "5",
                       "--max-precision-bits", "8")[0] == EXIT_CERTIFICATION
        # 64: usage error
        assert run_cli(capsys, "dim", "sl")[0] == EXIT_USAGE
