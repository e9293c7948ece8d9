"""
Unit tests for the zerocap command line
In cli/main.py, cli/render.py and cli/examples.py
"""

import orjson

from cli.examples import load_expected
from cli.main import build_parser, main, manifest_from_args


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, orjson.loads(out), out


# ============================================================================
# Report Tests
# ============================================================================

class TestReports:
    """Tests for the JSON reports of each subcommand"""

    # --- Basic Cases (4) ---

    def test_capacity(self, capsys):
        """Test the fig2 capacity report"""
        code, document, _ = run_json(capsys, "capacity", "fig2", "--q", "3")

        assert code == 0
        assert document["schema"] == "zerocap.report/1"
        assert abs(document["result"]["c0f_bits"] - 0.8907205870905389) < 1e-9
        assert document["result"]["verdict"] == "CapacityPositive"

    def test_zerotest_exit_code(self, capsys):
        """Test exit 10 for a zero-capacity machine and 0 otherwise"""
        code, document, _ = run_json(capsys, "zerotest", "fig2", "--q", "2")
        assert code == 10
        assert document["result"]["verdict"] == "CapacityZero"

        code, document, _ = run_json(capsys, "zerotest", "fig2")
        assert code == 0
        assert document["result"]["witness"] == [1, 1]

    def test_deterministic(self, capsys):
        """Test that two identical runs print identical bytes"""
        _, _, first = run_json(capsys, "capacity", "fig6", "--n", "10")
        _, _, second = run_json(capsys, "capacity", "fig6", "--n", "10")

        assert first == second

    def test_manifest_echoed(self, capsys):
        """Test that the manifest records the parsed parameters"""
        _, document, _ = run_json(capsys, "entropy", "fig1", "--tol", "1e-10")
        manifest = document["manifest"]

        assert manifest["machine"] == "fig1"
        assert manifest["parameters"]["tol"] == 1e-10
        assert manifest["output"] == "json"

    # --- Edge Cases (3) ---

    def test_blocklength_bounds(self, capsys):
        """Test that --n adds the finite-n bounds"""
        _, document, _ = run_json(capsys, "capacity", "fig2", "--n", "5")
        bounds = document["result"]["blocklength_bounds"]

        assert bounds["n"] == 5
        assert bounds["c0f_upper_bits"] >= document["result"]["c0f_bits"]

    def test_human_output(self, capsys):
        """Test that the default output is a readable table"""
        assert main(["entropy", "fig2"]) == 0
        assert "perron_value" in capsys.readouterr().out

    def test_manifest_from_args(self):
        """Test the manifest built from parsed arguments"""
        args = build_parser().parse_args(["oracle", "fig1", "--check", "counts", "--n", "4"])
        manifest = manifest_from_args(args)

        assert manifest.subcommand == "oracle"
        assert manifest.param("check") == "counts"
        assert manifest.param("n") == 4
        assert manifest.output == "human"


# ============================================================================
# Failure Tests
# ============================================================================

class TestFailures:
    """Tests for exit codes on bad input"""

    # --- Basic Cases (4) ---

    def test_corrupt_file(self, tmp_path, capsys):
        """Test exit 2 on a document that is not JSON"""
        path = tmp_path / "bad.json"
        path.write_text('{"q": 3, "states": 2, "edges": [')

        assert main(["validate", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_invalid_machine(self, tmp_path, capsys):
        """Test exit 2 on a split machine and on a machine with no states"""
        path = tmp_path / "split.json"
        path.write_text('{"q": 2, "states": 2, "edges": [[0, 0, 0], [0, 1, 1], [1, 1, 0]]}')

        assert main(["validate", str(path)]) == 2
        assert "strong_connectivity" in capsys.readouterr().err

        empty = tmp_path / "empty.json"
        empty.write_text('{"q": 2, "states": [], "edges": []}')

        assert main(["validate", str(empty)]) == 2
        assert "state_range" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        """Test exit 4 when the machine file does not exist"""
        assert main(["entropy", str(tmp_path / "absent.json")]) == 4

    def test_capacity_zero_simulation(self, capsys):
        """Test exit 1 when simulating a zero-capacity channel"""
        assert main(["simulate", "fig2", "--q", "2", "--k", "1"]) == 1

    # --- Edge Cases (3) ---

    def test_resource_guard(self, capsys):
        """Test exit 3 when a guard is exceeded"""
        assert main(["oracle", "fig6", "--check", "universality", "--max-len", "12"]) == 3

    def test_bad_alphabet(self, capsys):
        """Test exit 2 when --q is not above the largest label"""
        assert main(["entropy", "fig6", "--q", "1"]) == 2

    def test_bad_parameters(self, capsys):
        """Test exit 2 on an unknown noise source or a negative count length"""
        assert main(["simulate", "fig2", "--k", "1", "--noise", "gaussian"]) == 2
        assert main(["oracle", "fig2", "--check", "counts", "--n", "-1"]) == 2


# ============================================================================
# Simulation and oracle Tests
# ============================================================================

class TestSimulateAndOracle:
    """Tests for the simulate, oracle and examples subcommands"""

    # --- Basic Cases (4) ---

    def test_exhaustive(self, capsys):
        """Test exhaustive verification of the fig6 scheme"""
        code, document, _ = run_json(capsys, "simulate", "fig6", "--k", "2", "--noise", "exhaustive")
        result = document["result"]

        assert code == 0
        assert result["failures"] == 0
        assert result["worst_case_uses"] == result["planned_uses"] == 4

    def test_noise_file(self, tmp_path, capsys):
        """Test replaying a noise file"""
        path = tmp_path / "noise.txt"
        path.write_text("1 0 1 0\n")
        code, document, _ = run_json(capsys, "simulate", "fig2", "--k", "2", "--message", "5",
                                     "--noise", f"file:{path}")

        assert code == 0
        assert document["result"]["decoded"] == 5
        assert len(document["result"]["transcript"]) == 4

    def test_oracles_pass(self, capsys):
        """Test every oracle check on fig2"""
        for check in ("counts", "confusability", "universality", "codebook"):
            code, document, _ = run_json(capsys, "oracle", "fig2", "--check", check)
            assert code == 0
            assert document["result"]["ok"]

    def test_examples(self, capsys):
        """Test that the shipped worked examples reproduce"""
        code, document, _ = run_json(capsys, "examples")

        assert code == 0
        assert document["result"]["checked"] > 0

    # --- Edge Cases (3) ---

    def test_infeasible_noise_file(self, tmp_path, capsys):
        """Test exit 1 on noise the machine cannot emit"""
        path = tmp_path / "noise.txt"
        path.write_text("1 1 0 0")

        assert main(["simulate", "fig2", "--k", "2", "--noise", f"file:{path}"]) == 1

    def test_expected_files(self):
        """Test that the shipped expected reports parse"""
        names = [example.name for example in load_expected()]
        assert names == ["example1", "example2", "example3"]

    def test_empty_expected_dir(self, tmp_path, capsys):
        """Test exit 4 when no expected reports exist"""
        assert main(["examples", "--expected-dir", str(tmp_path)]) == 4
