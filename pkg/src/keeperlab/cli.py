"""Command-line interface: analysis reports, synthetic data, and the server."""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .config import EngineConfig
from .errors import KeeperLabError
from .evaluator import analyze_match, compare_model_vs_actual, move_distribution, toward_goal_line
from .kinematics import DIRECTION_LABELS
from .match_data import flag_eligibility, parse_match, save_match, segment_episodes
from .synthetic import generate_synthetic


def _load_config(path: str | None) -> EngineConfig:
    return EngineConfig.from_file(path) if path else EngineConfig()


@click.group()
def main() -> None:
    """Goalkeeper positioning engine."""


@main.command()
@click.argument("match_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON report here instead of stdout.")
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False), default=None,
              help="Also save a direction-distribution bar chart (PNG).")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Engine configuration JSON.")
def analyze(match_file: str, report_path: str | None, plot_path: str | None,
            config_path: str | None) -> None:
    """Model-vs-actual move distributions for one match file."""
    cfg = _load_config(config_path)
    try:
        match = parse_match(match_file)
        decisions = analyze_match(match, cfg)
    except KeeperLabError as exc:
        raise click.ClickException(str(exc))
    if not decisions:
        raise click.ClickException("no eligible decisions in this match")
    dist = move_distribution(decisions)
    report = {
        "match_id": match.meta.match_id,
        "n_decisions": len(decisions),
        "model_distribution": dist.frequencies,
        "backward_fraction": sum(
            1 for d in decisions if toward_goal_line(d.chosen_direction)
        ) / len(decisions),
    }
    if all(d.actual_direction is not None for d in decisions):
        divergence = compare_model_vs_actual(decisions)
        report["actual_distribution"] = divergence.actual_frequencies
        report["tv_distance"] = divergence.tv_distance
    text = json.dumps(report, indent=2)
    if report_path:
        Path(report_path).write_text(text + "\n", encoding="utf-8")
        click.echo(f"report written to {report_path}")
    else:
        click.echo(text)
    if plot_path:
        _plot_distributions(report, plot_path)
        click.echo(f"plot written to {plot_path}")


def _plot_distributions(report: dict, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = list(DIRECTION_LABELS)
    model = [report["model_distribution"][k] for k in labels]
    fig, ax = plt.subplots(figsize=(8, 4))
    x = range(len(labels))
    if "actual_distribution" in report:
        actual = [report["actual_distribution"][k] for k in labels]
        width = 0.4
        ax.bar([i - width / 2 for i in x], model, width, label="model", color="#2b6cb0")
        ax.bar([i + width / 2 for i in x], actual, width, label="actual", color="#c53030")
        ax.legend()
    else:
        ax.bar(list(x), model, 0.6, color="#2b6cb0")
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels)
    ax.set_ylabel("frequency")
    ax.set_xlabel("move direction (degrees; 180 = toward goal line)")
    ax.set_title("Chosen keeper moves")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


@main.command("gen-synthetic")
@click.option("--seed", type=int, required=True)
@click.option("--episodes", type=int, required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def gen_synthetic(seed: int, episodes: int, out_path: str) -> None:
    """Write a deterministic synthetic match file."""
    try:
        match = generate_synthetic(seed, episodes)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    save_match(match, out_path)
    click.echo(f"wrote {episodes} episodes to {out_path}")


@main.command("eval-episode")
@click.argument("match_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("episode_id")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None)
def eval_episode(match_file: str, episode_id: str, config_path: str | None) -> None:
    """Per-event evaluation summary for one episode."""
    from .evaluator import evaluate_position

    cfg = _load_config(config_path)
    try:
        match = parse_match(match_file)
    except KeeperLabError as exc:
        raise click.ClickException(str(exc))
    episodes = {ep.id: ep for ep in segment_episodes(match)}
    episode = episodes.get(episode_id)
    if episode is None:
        raise click.ClickException(
            f"unknown episode {episode_id!r}; available: {', '.join(sorted(episodes))}"
        )
    flags = flag_eligibility(episode, match.meta.pitch(), cfg.eligibility_fraction)
    for ev, flag in zip(episode.events, flags):
        line = f"{ev.timestamp:8.2f}s  {ev.type:<9s} {'green' if flag.green else 'black':<5s}"
        if flag.green:
            state = ev.freeze_frame
            result = evaluate_position(state.goalkeeper, state, cfg)
            worst = result.worst_target(cfg)
            line += f"  metric={result.metric:.4f}  exposed=({worst.y:+.2f}, {worst.z:.2f})"
        else:
            line += f"  ({flag.reason})"
        click.echo(line)


@main.command()
@click.argument("match_files", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
@click.option("--port", type=int, default=None, help="Default 8000; PORT env overrides.")
@click.option("--host", default="127.0.0.1")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None)
@click.option("--ui-dir", type=click.Path(file_okay=False), default=None,
              help="Static UI assets to serve at /.")
def serve(match_files: tuple[str, ...], port: int | None, host: str,
          config_path: str | None, ui_dir: str | None) -> None:
    """Host the HTTP API (and UI, when assets are available)."""
    import uvicorn

    from .service import MatchStore, create_app

    cfg = _load_config(config_path)
    try:
        store = MatchStore.from_files(list(match_files), cfg)
    except KeeperLabError as exc:
        raise click.ClickException(str(exc))
    if ui_dir is None:
        bundled = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = str(bundled) if bundled.is_dir() else None
    app = create_app(store, cfg, ui_dir=ui_dir)
    resolved_port = port if port is not None else int(os.environ.get("PORT", "8000"))
    click.echo(f"serving {len(store.matches)} match(es) on http://{host}:{resolved_port}")
    uvicorn.run(app, host=host, port=resolved_port, log_level="warning")


if __name__ == "__main__":
    sys.exit(main())
