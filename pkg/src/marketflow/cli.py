"""Command line entry points.

Subcommands:
  simulate  run one simulation and write series.csv (optionally series.svg)
  batch     sweep collision probability and spread over a block of seeds
  surface   tabulate closed-form Reynolds surfaces

Settings resolve in three layers: built-in defaults, then a config file
given with --config, then explicit flags.
"""

from __future__ import annotations

import argparse
import os
import sys

from .config import SimConfig
from .engine import run
from .io import (parse_config, write_batch_csv, write_grid_csv,
                 write_series_csv)
from .sweep import (batch_runs, default_l_grid, default_probability_grid,
                    default_speed_grid, surface_speed, surface_spread)

# CLI flag name -> SimConfig field
_FLAG_FIELDS = (
    ("seed", "seed"),
    ("steps", "steps"),
    ("collision_probability", "collision_probability"),
    ("spread", "initial_spread"),
    ("bid", "initial_bid"),
    ("mass", "m"),
    ("smoothing_length", "h"),
    ("window", "smoothing_window"),
)


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE",
                        help="config file with key = value lines")
    parser.add_argument("--seed", type=int, help="RNG seed")
    parser.add_argument("--steps", type=int, help="number of ticks")
    parser.add_argument("--collision-probability", type=float,
                        dest="collision_probability",
                        help="chance a new agent prices at the opposite best")
    parser.add_argument("--spread", type=int,
                        help="initial ask minus bid, in ticks")
    parser.add_argument("--bid", type=int, help="initial best bid price")
    parser.add_argument("--mass", type=float,
                        help="kernel mass scale for sizes")
    parser.add_argument("--smoothing-length", type=float,
                        dest="smoothing_length",
                        help="kernel smoothing length")
    parser.add_argument("--window", type=int,
                        help="trailing moving-average window")
    parser.add_argument("--out", metavar="DIR", default=".",
                        help="output directory (default: current)")
    parser.add_argument("--svg", action="store_true",
                        help="also write SVG figures")


def _resolve_config(args: argparse.Namespace) -> SimConfig:
    overrides = {}
    for flag, field in _FLAG_FIELDS:
        value = getattr(args, flag, None)
        if value is not None:
            overrides[field] = value
    return parse_config(args.config, overrides)


def _ensure_dir(path: str) -> None:
    os.makedirs(path, exist_ok=True)


def _cmd_simulate(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    bundle = run(config)
    _ensure_dir(args.out)
    csv_path = os.path.join(args.out, "series.csv")
    write_series_csv(bundle, csv_path)
    written = [csv_path]
    if args.svg:
        from .svg import series_figure, write_svg
        svg_path = os.path.join(args.out, "series.svg")
        write_svg(series_figure(bundle), svg_path)
        written.append(svg_path)
    last = bundle.ticks[-1]
    print(f"simulate: {config.steps} ticks, final spread {last.spread}, "
          f"final smoothed viscosity {bundle.smoothed_mu[-1]:.6f}, "
          f"final smoothed Reynolds {bundle.smoothed_reynolds[-1]:.6f}")
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_batch(args: argparse.Namespace) -> int:
    base = _resolve_config(args)
    param_grid = [
        {"collision_probability": p, "initial_spread": l}
        for p in (0.99, 0.15)
        for l in (1, 20)
    ]
    seeds = list(range(base.seed, base.seed + args.n_seeds))
    summaries = batch_runs(base, param_grid, seeds)
    _ensure_dir(args.out)
    csv_path = os.path.join(args.out, "batch.csv")
    write_batch_csv(summaries, csv_path)
    failed = sum(1 for s in summaries if s.error is not None)
    print(f"batch: {len(summaries)} runs, {failed} failed")
    print(f"wrote {csv_path}")
    return 0


def _cmd_surface(args: argparse.Namespace) -> int:
    p_grid = default_probability_grid()
    speed = surface_speed(default_speed_grid(), p_grid, l=1.0)
    spread = surface_spread(default_l_grid(), p_grid, v_t=1.0)
    _ensure_dir(args.out)
    speed_path = os.path.join(args.out, "surface_speed.csv")
    spread_path = os.path.join(args.out, "surface_spread.csv")
    write_grid_csv(speed, speed_path)
    write_grid_csv(spread, spread_path)
    written = [speed_path, spread_path]
    if args.svg:
        from .svg import surface_figure, write_svg
        for grid, name in ((speed, "surface_speed.svg"),
                           (spread, "surface_spread.svg")):
            path = os.path.join(args.out, name)
            write_svg(surface_figure(grid), path)
            written.append(path)
    for path in written:
        print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="marketflow",
        description="order book simulator with fluid-flow diagnostics")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run one simulation")
    _add_config_flags(p_sim)
    p_sim.set_defaults(func=_cmd_simulate)

    p_batch = sub.add_parser("batch",
                             help="run a probability/spread sweep")
    _add_config_flags(p_batch)
    p_batch.add_argument("--n-seeds", type=int, default=20,
                         dest="n_seeds",
                         help="seeds per grid cell (default 20)")
    p_batch.set_defaults(func=_cmd_batch)

    p_surf = sub.add_parser("surface",
                            help="tabulate closed-form Reynolds surfaces")
    p_surf.add_argument("--out", metavar="DIR", default=".",
                        help="output directory (default: current)")
    p_surf.add_argument("--svg", action="store_true",
                        help="also write SVG heatmaps")
    p_surf.set_defaults(func=_cmd_surface)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
