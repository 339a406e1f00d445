"""The dyck command line: verbs, exit codes, JSON schemas, file input."""

from __future__ import annotations

import json

from rational_dyck.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_running_example(self, capsys):
        code, out, _ = run(capsys, "stats", "--a", "5", "--b", "8", "--path", "NNNENEEENEEEE")
        assert code == 0
        assert json.loads(out) == {
            "area": 9, "coarea": 5, "rank": 2, "sl": 10, "slp": 4, "dinv": 4, "delta": 5,
        }

    def test_lowest_path(self, capsys):
        code, out, _ = run(capsys, "stats", "--a", "3", "--b", "4", "--path", "NENENEE")
        assert code == 0 and json.loads(out)["area"] == 0

    def test_parse_error_exit_1(self, capsys):
        code, _, err = run(capsys, "stats", "--a", "2", "--b", "3", "--path", "NNX")
        assert code == 1 and "offset 2" in err

    def test_missing_arguments(self, capsys):
        code, _, err = run(capsys, "stats", "--a", "2")
        assert code == 1

    def test_file_input(self, capsys, tmp_path):
        spec_file = tmp_path / "paths.txt"
        spec_file.write_text("5 8 NNNENEEENEEEE\n2 3 NENEE\n")
        code, out, _ = run(capsys, "stats", "--file", str(spec_file))
        records = json.loads(out)
        assert code == 0 and len(records) == 2
        assert records[0]["sl"] == 10 and records[1]["area"] == 0


class TestMap:
    def test_zeta(self, capsys):
        code, out, _ = run(
            capsys, "map", "--a", "5", "--b", "8", "--path", "NNNENEEENEEEE",
            "--map", "zeta",
        )
        assert code == 0 and out.strip() == "NENENENENEEEE"

    def test_eta_json(self, capsys):
        code, out, _ = run(
            capsys, "map", "--a", "5", "--b", "8", "--path", "NNNENEEENEEEE",
            "--map", "eta", "--method", "all", "--json",
        )
        record = json.loads(out)
        assert code == 0
        assert record["steps"] == "NNENEENEEENEE"
        assert record["mu"] == [3, 2, 2, 1, 1, 1, 0, 0]

    def test_conjugate_twice_is_identity(self, capsys):
        code, out, _ = run(
            capsys, "map", "--a", "5", "--b", "8", "--path", "NNNENEEENEEEE",
            "--map", "conjugate",
        )
        word = out.strip()
        code2, out2, _ = run(
            capsys, "map", "--a", "5", "--b", "8", "--path", word, "--map", "conjugate"
        )
        assert code == code2 == 0 and out2.strip() == "NNNENEEENEEEE"

    def test_flip_changes_dims(self, capsys):
        code, out, _ = run(
            capsys, "map", "--a", "5", "--b", "8", "--path", "NNNENEEENEEEE",
            "--map", "flip", "--json",
        )
        record = json.loads(out)
        assert code == 0 and (record["a"], record["b"]) == (8, 5)


class TestInvert:
    def test_running_example(self, capsys):
        code, out, _ = run(
            capsys, "invert", "--a", "5", "--b", "8", "--path", "NENENENENEEEE",
            "--json", "--trace",
        )
        record = json.loads(out)
        assert code == 0
        assert record["steps"] == "NNNENEEENEEEE"
        assert record["strategy"] in ("search", "table")
        assert isinstance(record["deltas"], list)

    def test_strategies(self, capsys):
        for strategy in ("square", "fuss", "search", "table", "auto"):
            code, out, _ = run(
                capsys, "invert", "--a", "2", "--b", "3", "--path", "NENEE",
                "--strategy", strategy,
            )
            assert code == 0 and out.startswith("NNEEE")

    def test_fuss_trace_text(self, capsys):
        code, out, _ = run(
            capsys, "invert", "--a", "3", "--b", "7", "--path",
            "NENENEEEEE", "--strategy", "fuss", "--trace",
        )
        assert code == 0 and "deltas=" in out


class TestVerify:
    def test_counts_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--check", "counts", "--max-sum", "8")
        assert code == 0 and "(2,3) ok" in out

    def test_all_checks_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--check", "all", "--max-sum", "7", "--json")
        record = json.loads(out)
        assert code == 0 and record["violations"] == []

    def test_jobs_flag(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--check", "zeta-bijective", "--max-sum", "8", "--jobs", "4"
        )
        assert code == 0

    def test_rank_variant_path_yields_violation_witness(self, capsys):
        # with the bounded-partition rank the polynomial identity fails, so
        # this doubles as a live test of the exit-2 witness contract
        code, out, _ = run(
            capsys, "verify", "--check", "qcatalan", "--max-sum", "5",
            "--rank-variant", "path", "--json",
        )
        assert code == 2
        witness = json.loads(out.splitlines()[-1])
        assert witness["violations"] and witness["violations"][0]["check"] == "qcatalan"

    def test_method_disagreement_exit_3(self, capsys, monkeypatch):
        import rational_dyck.cli as cli
        from rational_dyck.errors import MethodDisagreement

        def broken(path, check=False):
            raise MethodDisagreement("zeta(demo)", {"cores": "x", "sweep": "y"})

        monkeypatch.setattr(cli, "zeta", broken)
        code, _, err = run(
            capsys, "map", "--a", "2", "--b", "3", "--path", "NENEE",
            "--map", "zeta", "--method", "all",
        )
        assert code == 3 and "cores" in err and "sweep" in err


class TestRender:
    def test_ascii(self, capsys):
        code, out, _ = run(
            capsys, "render", "--a", "5", "--b", "8", "--path", "NNNENEEENEEEE",
            "--overlays", "hooks,lasers",
        )
        assert code == 0 and "laser total: 10" in out and "27" in out

    def test_svg(self, capsys):
        code, out, _ = run(
            capsys, "render", "--a", "2", "--b", "3", "--path", "NENEE",
            "--format", "svg",
        )
        assert code == 0 and out.startswith("<svg")

    def test_bad_overlay_exit_1(self, capsys):
        code, _, err = run(
            capsys, "render", "--a", "2", "--b", "3", "--path", "NENEE",
            "--overlays", "glitter",
        )
        assert code == 1
