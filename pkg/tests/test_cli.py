import numpy as np
import pytest

from lssl.cli import main


@pytest.fixture
def square_dataset(tmp_path):
    edges = tmp_path / "edges.txt"
    edges.write_text("a b\nb c\nc d\na d\n")
    seeds = tmp_path / "seeds.txt"
    seeds.write_text("a 0\nc 1\n")
    return edges, seeds


class TestClassifyCommand:
    def test_rl(self, square_dataset, capsys):
        edges, seeds = square_dataset
        rc = main(["classify", "--edges", str(edges), "--labels", str(seeds),
                   "--method", "rl", "--beta", "1.0"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "a 0"
        assert lines[2] == "c 1"
        assert len(lines) == 4

    def test_heat_method(self, square_dataset, capsys):
        edges, seeds = square_dataset
        rc = main(["classify", "--edges", str(edges), "--labels", str(seeds),
                   "--method", "heat-standard", "--t", "0.5"])
        assert rc == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 4

    def test_solver_choice(self, square_dataset, capsys):
        edges, seeds = square_dataset
        outputs = []
        for solver in ("cg", "power", "cholesky"):
            rc = main(["classify", "--edges", str(edges), "--labels", str(seeds),
                       "--solver", solver])
            assert rc == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1] == outputs[2]

    def test_missing_file_is_input_error(self, tmp_path, capsys):
        rc = main(["classify", "--edges", str(tmp_path / "nope"), "--labels", "x"])
        assert rc == 1
        assert "error" in capsys.readouterr().err

    def test_disconnected_rejected_without_flag(self, tmp_path, capsys):
        edges = tmp_path / "edges.txt"
        edges.write_text("a b\nc d\n")
        seeds = tmp_path / "seeds.txt"
        seeds.write_text("a 0\nc 1\n")
        assert main(["classify", "--edges", str(edges), "--labels", str(seeds)]) == 1
        capsys.readouterr()
        rc = main(["classify", "--edges", str(edges), "--labels", str(seeds),
                   "--allow-components"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().splitlines()
        # each component follows its own seed
        assert lines == ["a 0", "b 0", "c 1", "d 1"]


class TestSweepCommand:
    def test_bundled_sweep(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.txt"
        cfg.write_text(
            "edges: lesmis\nmethod: rl\ngrid: 0.5, 2.0\nn_trials: 2\nper_class: 2\nrng_seed: 4\n"
        )
        out = tmp_path / "out.csv"
        assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "method,param,trial,precision"
        assert len(lines) == 5

    def test_logspace_grid_and_high_degree(self, tmp_path):
        cfg = tmp_path / "cfg.txt"
        cfg.write_text(
            "edges: lesmis\nmethod: pagerank\ngrid: logspace 0.1 10 3\n"
            "strategy: high-degree\npool_size: 3\nn_trials: 1\n"
        )
        out = tmp_path / "out.csv"
        assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 0
        assert len(out.read_text().splitlines()) == 4

    def test_bad_config_is_input_error(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.txt"
        cfg.write_text("method rl\n")
        assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "o.csv")]) == 1


class TestRidgeCommand:
    def test_values(self, tmp_path, capsys):
        comps = tmp_path / "comps.txt"
        comps.write_text("0 1 1.0\n")
        assert main(["ridge", "--lambda", "1.0", "--input", str(comps)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        vals = [float(line.split()[1]) for line in lines]
        assert vals == pytest.approx([1 / 3, -1 / 3])

    def test_bad_lambda(self, tmp_path, capsys):
        comps = tmp_path / "comps.txt"
        comps.write_text("0 1 1.0\n")
        assert main(["ridge", "--lambda", "-1", "--input", str(comps)]) == 1


class TestVerifyCommand:
    def test_passes(self, capsys):
        assert main(["verify", "--max-nodes", "12"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out
        assert "FAIL" not in out
