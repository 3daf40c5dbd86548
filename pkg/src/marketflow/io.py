"""Config files, CSV serialization, reproducibility headers.

Every output file starts with a commented metadata block that echoes
the full configuration, the seed, and the generator identity, so the
file alone suffices to reproduce itself. Files are written to a
temporary sibling and renamed into place.
"""

from __future__ import annotations

import math
import os
from dataclasses import fields

from . import __version__
from .agents import GENERATOR_NAME
from .config import SimConfig, coerce_field
from .engine import SeriesBundle
from .sweep import RunSummary, SurfaceGrid

SERIES_COLUMNS = ("t,bid,ask,mid,return,v_T,l,V,p_hat,mu_raw,mu_smoothed,"
                  "reynolds_raw,reynolds_smoothed,regime")


def parse_config_lines(lines, source="config") -> dict:
    """Read `key = value` pairs; # starts a comment; unknown keys fail."""
    values = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, rhs = line.partition("=")
        key = key.strip()
        values[key] = coerce_field(key, rhs.strip())
    return values


def parse_config(path: str | None = None, overrides: dict | None = None) -> SimConfig:
    """Defaults, then file values, then explicit overrides; validated."""
    values = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            values.update(parse_config_lines(fh, source=path))
    if overrides:
        for key, val in overrides.items():
            if key not in {f.name for f in fields(SimConfig)}:
                raise ValueError(f"unknown config key: {key}")
            values[key] = val
    return SimConfig(**values).validate()


def config_echo_lines(config: SimConfig) -> list[str]:
    """Canonical `key = value` lines; repr round-trips every float."""
    return [f"{f.name} = {getattr(config, f.name)!r}" if isinstance(getattr(config, f.name), float)
            else f"{f.name} = {getattr(config, f.name)}"
            for f in fields(SimConfig)]


def metadata_header(config: SimConfig) -> list[str]:
    lines = ["# config-begin"]
    lines += [f"# {line}" for line in config_echo_lines(config)]
    lines += ["# config-end",
              f"# generator = {GENERATOR_NAME}",
              f"# version = {__version__}"]
    return lines


def parse_series_header(path: str) -> SimConfig:
    """Recover the exact SimConfig from a series file's metadata block."""
    block: list[str] = []
    inside = False
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            stripped = line.strip()
            if stripped == "# config-begin":
                inside = True
            elif stripped == "# config-end":
                break
            elif inside and stripped.startswith("#"):
                block.append(stripped[1:].strip())
    if not block:
        raise ValueError(f"{path} has no config block")
    return SimConfig(**parse_config_lines(block, source=path)).validate()


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return f"{x:.6f}"


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_series_csv(bundle: SeriesBundle, path: str) -> None:
    """One row per tick; infinities spelled as the token `inf`."""
    lines = metadata_header(bundle.config)
    lines.append(SERIES_COLUMNS)
    for tick, mu_s, nr_s in zip(bundle.ticks, bundle.smoothed_mu,
                                bundle.smoothed_reynolds):
        lines.append(",".join((
            str(tick.t), str(tick.bid), str(tick.ask), _fmt(tick.mid),
            _fmt(tick.ret), _fmt(tick.v_t), str(tick.spread),
            _fmt(tick.volume), _fmt(tick.p_hat), _fmt(tick.mu), _fmt(mu_s),
            _fmt(tick.reynolds), _fmt(nr_s), tick.regime.value)))
    _atomic_write(path, "\n".join(lines) + "\n")


def write_grid_csv(grid: SurfaceGrid, path: str) -> None:
    """Long-format surface rows: x, collision probability, Reynolds."""
    lines = [f"# surface over ({grid.x_name}, p)"]
    for key, val in sorted(grid.fixed_params.items()):
        lines.append(f"# {key} = {val!r}")
    lines.append(f"# version = {__version__}")
    lines.append(f"{grid.x_name},p,reynolds")
    for i, p in enumerate(grid.y_axis):
        for j, x in enumerate(grid.x_axis):
            lines.append(f"{_fmt(x)},{_fmt(p)},{_fmt(grid.values[i][j])}")
    _atomic_write(path, "\n".join(lines) + "\n")


def write_batch_csv(summaries: list[RunSummary], path: str) -> None:
    """One row per run with the varied parameters and final statistics."""
    lines = [f"# batch of {len(summaries)} runs",
             f"# generator = {GENERATOR_NAME}",
             f"# version = {__version__}",
             ("collision_probability,initial_spread,initial_bid,steps,seed,"
              "final_mu,final_reynolds,max_reynolds,"
              "n_laminar,n_transitional,n_turbulent,error")]
    for s in summaries:
        cfg = s.config
        stat = [_fmt(v) if v is not None else "" for v in
                (s.final_mu, s.final_reynolds, s.max_reynolds)]
        lines.append(",".join((
            repr(cfg.collision_probability), str(cfg.initial_spread),
            str(cfg.initial_bid), str(cfg.steps), str(s.seed),
            *stat,
            str(s.regime_counts.get("laminar", 0)),
            str(s.regime_counts.get("transitional", 0)),
            str(s.regime_counts.get("turbulent", 0)),
            s.error or "")))
    _atomic_write(path, "\n".join(lines) + "\n")
