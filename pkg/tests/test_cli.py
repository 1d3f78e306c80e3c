import json

import pytest
from click.testing import CliRunner

from keeperlab import generate_synthetic, parse_match, save_match, segment_episodes
from keeperlab.cli import main


@pytest.fixture
def match_file(tmp_path):
    path = tmp_path / "match.json"
    save_match(generate_synthetic(19, 12), path)
    return str(path)


class TestAnalyze:
    def test_report_histogram_sums_to_one(self, match_file):
        runner = CliRunner()
        result = runner.invoke(main, ["analyze", match_file])
        assert result.exit_code == 0, result.output
        report = json.loads(result.output)
        assert sum(report["model_distribution"].values()) == pytest.approx(1.0, abs=1e-9)
        assert 0.0 <= report["tv_distance"] <= 1.0
        assert report["n_decisions"] > 0

    def test_report_file_and_plot(self, match_file, tmp_path):
        report_path = tmp_path / "report.json"
        plot_path = tmp_path / "moves.png"
        runner = CliRunner()
        result = runner.invoke(
            main,
            ["analyze", match_file, "--report", str(report_path), "--plot", str(plot_path)],
        )
        assert result.exit_code == 0, result.output
        assert json.loads(report_path.read_text())["n_decisions"] > 0
        assert plot_path.stat().st_size > 0

    def test_missing_file_fails(self):
        runner = CliRunner()
        assert runner.invoke(main, ["analyze", "no-such.json"]).exit_code != 0


class TestGenSynthetic:
    def test_writes_parseable_match(self, tmp_path):
        out = tmp_path / "out.json"
        runner = CliRunner()
        result = runner.invoke(
            main, ["gen-synthetic", "--seed", "7", "--episodes", "5", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        match = parse_match(out)
        assert len(segment_episodes(match)) == 5

    def test_deterministic_output(self, tmp_path):
        runner = CliRunner()
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for out in (a, b):
            runner.invoke(
                main, ["gen-synthetic", "--seed", "3", "--episodes", "4", "--out", str(out)]
            )
        assert a.read_bytes() == b.read_bytes()

    def test_bad_episode_count_fails(self, tmp_path):
        runner = CliRunner()
        result = runner.invoke(
            main,
            ["gen-synthetic", "--seed", "1", "--episodes", "0", "--out", str(tmp_path / "x.json")],
        )
        assert result.exit_code != 0


class TestEvalEpisode:
    def test_prints_per_event_lines(self, match_file):
        match = parse_match(match_file)
        episode = segment_episodes(match)[0]
        runner = CliRunner()
        result = runner.invoke(main, ["eval-episode", match_file, episode.id])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert len(lines) == len(episode.events)
        assert any("metric=" in line for line in lines)

    def test_unknown_episode_fails(self, match_file):
        runner = CliRunner()
        result = runner.invoke(main, ["eval-episode", match_file, "nope"])
        assert result.exit_code != 0
        assert "unknown episode" in result.output


class TestUsage:
    def test_unknown_flag_nonzero_exit(self, match_file):
        runner = CliRunner()
        assert runner.invoke(main, ["analyze", match_file, "--bogus"]).exit_code != 0

    def test_help_runs(self):
        runner = CliRunner()
        for cmd in ([], ["serve", "--help"], ["analyze", "--help"]):
            assert runner.invoke(main, cmd + (["--help"] if not cmd else [])).exit_code == 0
