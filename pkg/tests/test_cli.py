"""Command-line surface: formats, cache behavior, exit codes, determinism."""

import json

from chardeg import cli
from chardeg.cache import cache_path, load_spectrum, store_spectrum
from chardeg.serialize import spectrum_to_doc
from chardeg.spectrum import spectrum_an, spectrum_sn


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDegree:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "degree", "3,1,1")
        assert code == 0
        assert "degree: 6" in out
        assert "self-conjugate: yes" in out
        assert "alternating degree: 3 x2" in out
        assert "hook product: 20" in out

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "degree", "5")
        assert code == 0
        assert "degree: 1" in out

    def test_boundary_ratio(self, capsys):
        code, out, _ = run(capsys, "degree", "2,1")
        assert code == 0
        assert "degree: 2" in out
        assert "boundary: equals 4" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "degree", "3,1,1", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert doc["degree"] == "6"
        assert doc["self_conjugate"] is True
        assert doc["alternating_degree"] == "3"
        assert doc["lambda_up"] == "4,1"

    def test_parse_error_exits_nonzero(self, capsys):
        code, _, err = run(capsys, "degree", "1,3")
        assert code == 2
        assert "error" in err


class TestBranch:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "branch", "3,1")
        assert code == 0
        assert "self multiplicity: 2" in out
        assert "degree identity: 4 * 3 = 12" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "branch", "3,1", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["self_multiplicity"] == 2
        got = {c["partition"] for c in doc["constituents"]}
        assert got == {"4", "2,2", "2,1,1"}


class TestSpectrumCmd:
    def test_csv_n5(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "5", "--group", "s", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "degree,multiplicity,members,splits"
        assert lines[1] == "6,1,3 1 1,"
        assert lines[2] == "5,2,3 2;2 2 1,"
        assert lines[3] == "4,2,4 1;2 1 1 1,"
        assert lines[4] == "1,2,5;1 1 1 1 1,"
        assert lines[5] == "epsilon,7/3,2.33333333333,"

    def test_json_a5(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "5", "--group", "a", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["b"] == "5"
        assert doc["epsilon"] == "7/5"
        assert doc["classes"][2] == {
            "degree": "3",
            "size": 2,
            "members": ["3,1,1"],
            "splits": [2],
        }

    def test_text_n1(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "1")
        assert code == 0
        assert "b: 1" in out

    def test_resource_guard(self, capsys):
        code, _, err = run(capsys, "spectrum", "--n", "25", "--max-n", "20")
        assert code == 2
        assert "exceeds" in err

    def test_determinism_across_threads(self, capsys):
        _, out1, _ = run(capsys, "spectrum", "--n", "18", "--format", "json")
        _, out2, _ = run(capsys, "spectrum", "--n", "18", "--format", "json", "--threads", "2")
        _, out3, _ = run(capsys, "spectrum", "--n", "18", "--format", "json", "--threads", "3")
        assert out1 == out2 == out3


class TestCache:
    def test_write_and_reuse(self, capsys, tmp_path):
        code, out1, _ = run(
            capsys, "spectrum", "--n", "9", "--format", "json", "--cache-dir", str(tmp_path)
        )
        assert code == 0
        path = cache_path(tmp_path, "S", 9)
        assert path.exists()
        entry = json.loads(path.read_text())
        assert entry["schema"] == 1 and entry["spectrum"]["n"] == 9
        code, out2, _ = run(
            capsys, "spectrum", "--n", "9", "--format", "json", "--cache-dir", str(tmp_path)
        )
        assert code == 0 and out2 == out1

    def test_cache_round_trip_identity(self, tmp_path):
        for group, n in (("S", 11), ("A", 11)):
            spec = spectrum_sn(n) if group == "S" else spectrum_an(n)
            store_spectrum(tmp_path, spec)
            loaded = load_spectrum(tmp_path, group, n)
            assert loaded == spec
            assert spectrum_to_doc(loaded) == spectrum_to_doc(spec)

    def test_corrupt_cache_recomputed(self, capsys, tmp_path):
        path = cache_path(tmp_path, "S", 8)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("{ this is not json")
        code, out, _ = run(
            capsys, "spectrum", "--n", "8", "--format", "json", "--cache-dir", str(tmp_path)
        )
        assert code == 0
        assert json.loads(out)["b"] == "90"
        # rewritten with a valid entry
        assert json.loads(path.read_text())["spectrum"]["b"] == "90"

    def test_version_mismatch_recomputed(self, capsys, tmp_path):
        path = cache_path(tmp_path, "S", 8)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"schema": 99, "spectrum": {}}))
        code, out, _ = run(
            capsys, "spectrum", "--n", "8", "--format", "json", "--cache-dir", str(tmp_path)
        )
        assert code == 0
        assert json.loads(out)["b"] == "90"

    def test_env_var_cache_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
        code, _, _ = run(capsys, "spectrum", "--n", "7", "--format", "json")
        assert code == 0
        assert cache_path(tmp_path, "S", 7).exists()


class TestGraphCmd:
    def test_json_n4(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "4")
        doc = json.loads(out)
        assert code == 0
        assert doc["components"] == [["4", "3,1", "2,1,1", "1,1,1,1"], ["2,2"]]

    def test_dot_n1(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "1", "--format", "dot")
        assert code == 0
        assert out == 'graph partitions_of_1 {\n  "1";\n}\n'

    def test_round_trip_n6(self, capsys):
        from chardeg import build_graph
        from chardeg.serialize import graph_from_doc

        code, out, _ = run(capsys, "graph", "--n", "6")
        assert code == 0
        assert graph_from_doc(json.loads(out)) == build_graph(6)


class TestVerifyCmd:
    def test_theorem2_range(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--range", "7..12", "--checks", "theorem2"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all(line.startswith("PASS") for line in lines)

    def test_domain_rejection(self, capsys):
        code, _, err = run(capsys, "verify", "--range", "3..4", "--checks", "theorem1")
        assert code == 2
        assert "stated for n >=" in err

    def test_all_checks_small_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--range", "5..8", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        statuses = {r["status"] for r in doc["reports"]}
        assert "fail" not in statuses
        checks = {r["check"] for r in doc["reports"]}
        assert {
            "theorem1",
            "theorem2",
            "sandwich",
            "ratio-lemma",
            "low-degree-count",
            "near-max-count",
            "move-scan-a",
            "move-scan-s",
            "induced-bound",
            "epsilon-bounds",
        } <= checks

    def test_override_domain(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--n",
            "5",
            "--checks",
            "theorem2",
            "--override-domain",
            "--format",
            "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["reports"][0]["status"] == "informational"

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, "verify", "--n", "7", "--checks", "bogus")
        assert code == 2 and "unknown check" in err

    def test_exit_one_on_failure(self, capsys, monkeypatch):
        from chardeg.report import FAIL, VerificationReport

        def fake(n, override_domain=False):
            return VerificationReport(check="theorem2", n=n, status=FAIL)

        monkeypatch.setattr(cli, "verify_theorem2", fake)
        code, out, _ = run(capsys, "verify", "--n", "8", "--checks", "theorem2")
        assert code == 1
        assert out.startswith("FAIL")

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "verify", "--range", "9..3", "--checks", "sandwich")
        assert code == 2

    def test_missing_n_and_range(self, capsys):
        code, _, err = run(capsys, "verify", "--checks", "sandwich")
        assert code == 2


class TestScanCmd:
    def test_rows_and_values(self, capsys, tmp_path):
        out_path = tmp_path / "trend.csv"
        code, out, _ = run(capsys, "scan", "--n", "10", "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        assert lines[0] == "n,b_s,m1,b_a,ba_equals_bs,eps_s,eps_s_decimal,eps_a,eps_a_decimal,x,y"
        assert len(lines) == 7  # header + n = 5..10
        first = lines[1].split(",")
        assert first[0] == "5" and first[1] == "6" and first[3] == "5"
        assert first[5] == "7/3" and first[7] == "7/5"
        assert first[10] == "2"

    def test_single_row(self, capsys, tmp_path):
        out_path = tmp_path / "one.csv"
        code, _, _ = run(capsys, "scan", "--n", "5", "--out", str(out_path))
        assert code == 0
        assert len(out_path.read_text().strip().splitlines()) == 2

    def test_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "scan", "--n", "8", "--out", str(a))
        run(capsys, "scan", "--n", "8", "--out", str(b), "--threads", "2")
        assert a.read_bytes() == b.read_bytes()

    def test_guard(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "scan", "--n", "70", "--out", str(tmp_path / "x.csv")
        )
        assert code == 2

    def test_unwritable_target_leaves_no_partial_file(self, capsys, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        out_path = blocker / "trend.csv"
        code, _, err = run(capsys, "scan", "--n", "5", "--out", str(out_path))
        assert code == 2 and "error" in err
        assert list(tmp_path.iterdir()) == [blocker]
