import json

from cored_hexagons.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCount:
    def test_brute_unit_hexagon(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--a", "1", "--b", "1", "--c", "1", "--m", "0",
            "--method", "brute",
        )
        assert code == 0
        assert json.loads(out)["value"] == "2"

    def test_formula_all_odd_signed(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--a", "3", "--b", "3", "--c", "3", "--m", "1",
            "--weight", "minus1", "--method", "formula",
        )
        assert code == 0
        assert json.loads(out)["value"] == "0"

    def test_methods_agree(self, capsys):
        values = {}
        for method in ("formula", "determinant", "brute"):
            code, out, _ = run_cli(
                capsys, "count", "--a", "2", "--b", "5", "--c", "1", "--m", "2",
                "--method", method,
            )
            assert code == 0
            values[method] = json.loads(out)["value"]
        assert len(set(values.values())) == 1

    def test_relabeling_echoed(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--a", "1", "--b", "2", "--c", "3", "--m", "1",
            "--method", "brute",
        )
        assert code == 0
        assert json.loads(out)["relabel"] == "bca"

    def test_parity_mismatch_is_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "count", "--a", "1", "--b", "2", "--c", "4", "--m", "1",
            "--weight", "one", "--method", "determinant",
        )
        assert code == 2
        assert "determinant" in err

    def test_cap_is_exit_3(self, capsys):
        code, _, err = run_cli(
            capsys, "count", "--a", "3", "--b", "3", "--c", "3", "--m", "2",
            "--method", "brute", "--cap", "10",
        )
        assert code == 3

    def test_byte_stable_output(self, capsys):
        outs = set()
        for _ in range(2):
            _, out, _ = run_cli(
                capsys, "count", "--a", "2", "--b", "2", "--c", "2", "--m", "2",
            )
            outs.add(out)
        assert len(outs) == 1


class TestOtherCommands:
    def test_formula_macmahon(self, capsys):
        code, out, _ = run_cli(
            capsys, "formula", "--id", "macmahon", "--a", "0", "--b", "5", "--c", "7"
        )
        assert code == 0
        assert json.loads(out)["value"] == "1"

    def test_cyclic_count_cyclotomic_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "cyclic-count", "--a", "2", "--m", "1", "--weight", "omega6"
        )
        assert code == 0
        value = json.loads(out)["value"]
        assert value == {"ring": "sixth", "c0": "0", "c1": "5"}

    def test_verify_suite(self, capsys, tmp_path):
        jsonl = tmp_path / "reports.jsonl"
        csv = tmp_path / "summary.csv"
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "Case10", "--max-a", "2", "--max-m", "2",
            "--jsonl", str(jsonl), "--csv", str(csv),
        )
        assert code == 0
        summary = json.loads(out)
        assert summary["failed"] == 0
        assert jsonl.exists() and csv.exists()
        lines = jsonl.read_text().strip().splitlines()
        assert len(lines) == summary["total"]
        assert csv.read_text().startswith("suite,total,passed,failed,skipped")

    def test_verify_unknown_suite(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "Nope")
        assert code == 2

    def test_asymptotic_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "asymptotic", "--a", "1", "--b", "1", "--c", "1", "--m", "1",
            "--n-list", "2,4",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("k,")
        assert lines[1] == "n,log_count_over_n2,deviation"
        assert len(lines) == 4

    def test_conjecture_sweep(self, capsys):
        code, out, _ = run_cli(
            capsys, "conjecture", "--which", "1", "--max-a", "2", "--max-m", "2"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "a,b,c,m,determinant,conjecture,status"
        assert all(line.endswith(("pass", "skip")) for line in lines[1:])

    def test_cell_cap_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("CORED_HEX_CELL_CAP", "10")
        code, _, _ = run_cli(
            capsys, "count", "--a", "3", "--b", "3", "--c", "3", "--m", "0",
            "--method", "brute",
        )
        assert code == 3
