"""End-to-end runs of the command line on shipped and generated instances."""

from pathlib import Path
from typing import Any, Callable, List, Optional

import orjson
import pytest
from typer.testing import CliRunner, Result

from pdrazin import __version__
from pdrazin.cli import app
from pdrazin.settings import AppSettings

Golden = Callable[[str], Path]


@pytest.fixture
def run(settings_file: Path) -> Callable[..., Result]:
    runner = CliRunner()

    def invoke(*args: str, env: Optional[dict] = None) -> Result:
        argv: List[str] = ["--config", str(settings_file), *args]
        return runner.invoke(app, argv, env=env)

    return invoke


def as_json(result: Result) -> Any:
    return orjson.loads(result.stdout)


class TestCompute:
    def test_jordan_block_json(self, run: Callable[..., Result], golden: Golden) -> None:
        result = run("compute", str(golden("jordan2")), "--json")
        assert result.exit_code == 0, result.output
        data = as_json(result)
        assert data["drazin_index"] == 2
        assert data["radical_index"] == 2
        assert data["inverse"] == [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
        assert data["quasinilpotence"]["is_quasinilpotent"] is True
        assert data["tolerances_used"]["tol_acc"] == 1e-8

    def test_named_element_text(self, run: Callable[..., Result], golden: Golden) -> None:
        result = run("compute", str(golden("commuting_diag2")), "b")
        assert result.exit_code == 0, result.output
        assert "b in FullMatrix(2)" in result.stdout
        assert "drazin_index:  1" in result.stdout

    def test_missing_file(self, run: Callable[..., Result], tmp_path: Path) -> None:
        result = run("compute", str(tmp_path / "absent.json"))
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_missing_element(self, run: Callable[..., Result], golden: Golden) -> None:
        result = run("compute", str(golden("jordan2")), "z")
        assert result.exit_code == 2


class TestVerify:
    def test_pass(self, run: Callable[..., Result], golden: Golden) -> None:
        result = run("verify", str(golden("orthogonal_diag3")), "thm2.5", "--json")
        assert result.exit_code == 0, result.output
        data = as_json(result)
        assert data["pass"] is True
        assert data["identity"] == "thm2.5"
        assert data["formula_residual"] < 1e-12
        assert "formula.sum" in data["tolerances_used"]

    def test_text_report(self, run: Callable[..., Result], golden: Golden) -> None:
        result = run("verify", str(golden("lambda2_shift")), "thm3.5")
        assert result.exit_code == 0, result.output
        assert "thm3.5 on FullMatrix(2): PASS" in result.stdout
        assert "series terms: left=2, right=0" in result.stdout

    def test_hypothesis_violation(
        self, run: Callable[..., Result], golden: Golden
    ) -> None:
        result = run("verify", str(golden("noncommuting2")), "thm2.7")
        assert result.exit_code == 4
        assert "commutation" in result.output

    def test_unknown_identity(self, run: Callable[..., Result], golden: Golden) -> None:
        assert run("verify", str(golden("jordan2")), "thm9.9").exit_code == 2

    def test_missing_lambda(self, run: Callable[..., Result], golden: Golden) -> None:
        assert run("verify", str(golden("commuting_diag2")), "thm3.5").exit_code == 2

    def test_identity_failure(
        self, run: Callable[..., Result], tmp_path: Path
    ) -> None:
        path = tmp_path / "strict.json"
        gen = run("gen", "--identity", "thm2.7", "--dim", "4", "--seed", "3")
        data = orjson.loads(gen.stdout)
        data["tolerances"] = {"tol_acc": 1e-300}
        path.write_bytes(orjson.dumps(data))

        result = run("verify", str(path), "thm2.7", "--json")
        assert result.exit_code == 1
        report = as_json(result)
        assert report["pass"] is False
        assert report["tolerances_used"]["formula.sum"] == 1e-300


class TestGen:
    def test_deterministic(self, run: Callable[..., Result]) -> None:
        args = ("gen", "--kind", "commuting", "--dim", "5", "--seed", "42")
        first, second = run(*args), run(*args)
        assert first.exit_code == 0, first.output
        assert first.stdout == second.stdout
        data = orjson.loads(first.stdout)
        assert data["seed"] == 42
        assert set(data["elements"]) == {"a", "b"}

    def test_target_index(
        self, run: Callable[..., Result], tmp_path: Path
    ) -> None:
        out = tmp_path / "index3.json"
        result = run(
            "gen", "--kind", "index", "--dim", "5", "--seed", "1", "--target", "3",
            "--out", str(out),
        )
        assert result.exit_code == 0, result.output
        computed = run("compute", str(out), "--json")
        assert as_json(computed)["drazin_index"] == 3

    def test_lambda_instance(self, run: Callable[..., Result], tmp_path: Path) -> None:
        out = tmp_path / "weyl.json"
        result = run(
            "gen", "--identity", "thm3.3", "--dim", "4", "--lambda=-1",
            "--out", str(out),
        )
        assert result.exit_code == 0, result.output
        assert run("verify", str(out), "thm3.3").exit_code == 0

    @pytest.mark.parametrize(
        "args",
        [
            ("--dim", "3"),
            ("--kind", "index", "--identity", "oracle", "--dim", "3"),
            ("--kind", "bogus", "--dim", "3"),
            ("--kind", "index", "--dim", "3", "--seed=-1"),
            ("--kind", "index", "--dim", "3", "--target", "9"),
            ("--identity", "thm3.5", "--dim", "3"),
            ("--kind", "lambda", "--dim", "3", "--lambda", "0"),
            ("--kind", "index", "--dim", "3", "--context", "octonion"),
        ],
    )
    def test_bad_arguments(self, run: Callable[..., Result], args: tuple) -> None:
        result = run("gen", *args)
        assert result.exit_code == 2, result.output


class TestFuzz:
    def test_passing_run(self, run: Callable[..., Result], tmp_path: Path) -> None:
        result = run(
            "fuzz", "thm2.7", "-n", "6", "--seed", "1", "--dims", "2..4",
            "--workers", "2", "--out-dir", str(tmp_path), "--json",
        )
        assert result.exit_code == 0, result.output
        data = as_json(result)
        assert data["pass"] is True
        assert data["passed"] == 6
        assert data["dims"] == [2, 4]
        assert list(tmp_path.iterdir()) == []

    def test_lambda_run_text(self, run: Callable[..., Result]) -> None:
        result = run("fuzz", "thm3.5", "-n", "4", "--dims", "3", "--lambda", "2")
        assert result.exit_code == 0, result.output
        assert "4/4 passed" in result.stdout

    def test_counterexamples_replay(
        self, run: Callable[..., Result], tmp_path: Path
    ) -> None:
        env = {"PDRAZIN_TOL_ACC": "1e-300"}
        result = run(
            "fuzz", "thm2.7", "-n", "2", "--seed", "7", "--dims", "3..3",
            "--workers", "1", "--out-dir", str(tmp_path), "--json", env=env,
        )
        assert result.exit_code == 1
        data = as_json(result)
        assert data["failed"] >= 1
        for failure in data["failures"]:
            path = Path(failure["counterexample"])
            assert path.parent == tmp_path
            assert path.name == f"thm2.7-s7-{failure['ordinal']}.json"
            replay = run("verify", str(path), "thm2.7", "--json", env=env)
            assert replay.exit_code == 1
            assert as_json(replay)["formula_residual"] == failure["formula_residual"]

    def test_same_seed_is_byte_identical(
        self, run: Callable[..., Result], tmp_path: Path
    ) -> None:
        env = {"PDRAZIN_TOL_ACC": "1e-300"}
        args = ["fuzz", "thm2.7", "-n", "3", "--seed", "11", "--dims", "3..4"]
        args += ["--out-dir", str(tmp_path), "--json"]
        first = run(*args, "--workers", "1", env=env)
        written = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
        second = run(*args, "--workers", "4", env=env)
        assert first.exit_code == second.exit_code == 1
        assert first.stdout_bytes == second.stdout_bytes
        assert written
        assert {p.name: p.read_bytes() for p in tmp_path.iterdir()} == written

        for failure in as_json(first)["failures"]:
            path = failure["counterexample"]
            replay = run("verify", path, "thm2.7", "--json", env=env)
            expected = dict(failure["report"])
            del expected["failures"]
            assert as_json(replay) == expected

    def test_index_range(self, run: Callable[..., Result]) -> None:
        result = run(
            "fuzz", "cor2.4", "-n", "4", "--dims", "3..5", "--indices", "2..5", "--json"
        )
        assert result.exit_code == 0, result.output
        data = as_json(result)
        assert data["indices"] == [2, 5]
        assert data["max_formula_residual"] is None

    @pytest.mark.parametrize(
        "args",
        [
            ("thm3.5", "-n", "2"),
            ("thm2.7", "-n", "0"),
            ("thm2.7", "--dims", "x..y"),
            ("cor2.4", "--indices", "4..2"),
            ("nope", "-n", "2"),
        ],
    )
    def test_bad_arguments(self, run: Callable[..., Result], args: tuple) -> None:
        assert run("fuzz", *args).exit_code == 2


class TestApplication:
    def test_version(self, run: Callable[..., Result]) -> None:
        result = run("--version")
        assert result.exit_code == 0
        assert result.stdout.strip() == f"pdrazin {__version__}"

    def test_identities(self, run: Callable[..., Result]) -> None:
        result = run("identities", "--json")
        assert result.exit_code == 0, result.output
        tags = [row["tag"] for row in as_json(result)]
        assert "thm2.7" in tags
        assert "cor2.8-group" in tags

    def test_invalid_configuration(
        self, run: Callable[..., Result], settings_file: Path
    ) -> None:
        AppSettings(settings_file=settings_file).tolerances.set("tol_acc", 1e-3)
        result = run("identities")
        assert result.exit_code == 2
        assert "configuration error" in result.output
