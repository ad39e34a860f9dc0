import csv
import os
import json

import pytest
from click.testing import CliRunner

from bench.run_config import RunConfig
from cli.app import SwapbenderApp
from config import MAX_WORKERS_VAR, Config
from swapbender import cli


class TestConfigurationFlow:
    @pytest.fixture
    def temp_config_env(self, tmp_path, monkeypatch):
        home_dir = tmp_path / "home"
        home_dir.mkdir()
        work_dir = tmp_path / "work"
        work_dir.mkdir()
        monkeypatch.setenv("HOME", str(home_dir))
        monkeypatch.chdir(work_dir)
        monkeypatch.delenv(MAX_WORKERS_VAR, raising=False)

        yield {
            "home_dir": home_dir,
            "work_dir": work_dir,
            "config_dir": home_dir / ".swapbender",
            "env_file": work_dir / ".env",
        }
        # load_dotenv writes straight into os.environ
        os.environ.pop(MAX_WORKERS_VAR, None)

    @pytest.fixture
    def bench_file(self, temp_config_env):
        path = temp_config_env["work_dir"] / "bench.json"
        path.write_text(json.dumps({"family": "sk", "sizes": [3], "topology": "line", "router": "shuffle"}))
        return path

    @pytest.mark.integration
    def test_preferences_feed_bench_defaults(self, temp_config_env, bench_file):
        runner = CliRunner()
        assert runner.invoke(cli, ["config", "--set", "instances", "2"]).exit_code == 0
        assert runner.invoke(cli, ["config", "--set", "t_2q", "20"]).exit_code == 0

        run_config = RunConfig.from_file(bench_file, Config())
        assert run_config.instances == 2
        assert run_config.durations.t_2q == 20

        out = temp_config_env["work_dir"] / "bench.csv"
        result = runner.invoke(cli, ["bench", "run", "--config", str(bench_file), "--out", str(out)])
        assert result.exit_code == 0, result.output

        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 2
        # doubled two-qubit duration shows up in every row's scaled time
        assert all(float(row["scaled_time"]) > 20 * int(row["two_q_depth"]) - 1 for row in rows)

    @pytest.mark.integration
    def test_env_file_caps_workers(self, temp_config_env, bench_file, mocker):
        temp_config_env["env_file"].write_text(f"{MAX_WORKERS_VAR}=1\n")
        app = SwapbenderApp(Config())
        run = mocker.patch("cli.app.run", return_value=iter([]))
        mocker.patch.object(app, "_display_summary")

        app.run_bench(bench_file, temp_config_env["work_dir"] / "out.csv")

        assert run.call_args.kwargs["workers"] == 1

    @pytest.mark.integration
    def test_example_env_round_trip(self, temp_config_env):
        config = Config()
        example = config.create_example_env()
        assert example.parent == temp_config_env["work_dir"]

        env_text = example.read_text().replace(f"# {MAX_WORKERS_VAR}=4", f"{MAX_WORKERS_VAR}=4")
        temp_config_env["env_file"].write_text(env_text)
        assert Config().max_workers() == 4
