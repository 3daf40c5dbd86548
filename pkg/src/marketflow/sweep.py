"""Analytical Reynolds surfaces and Monte Carlo batch sweeps."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping

from .config import SimConfig
from .engine import run
from .physics import FlowRegime, reynolds_closed_form


def default_speed_grid() -> list[float]:
    """Market speed axis: -5 to 5 in steps of 0.25."""
    return [(i - 20) / 4 for i in range(41)]


def default_l_grid() -> list[float]:
    """Spread axis: 1 to 20 in steps of 1."""
    return [float(i) for i in range(1, 21)]


def default_probability_grid() -> list[float]:
    """Collision probability axis: 0 to 0.99 in steps of 0.01."""
    return [i / 100 for i in range(100)]


@dataclass
class SurfaceGrid:
    """A pure tabulation of the closed-form Reynolds number."""

    x_name: str
    x_axis: list[float]
    y_axis: list[float]          # collision probabilities
    values: list[list[float]]    # values[i][j] at (y_axis[i], x_axis[j])
    fixed_params: dict


def _check_probabilities(p_grid: Iterable[float]) -> list[float]:
    ps = list(p_grid)
    for p in ps:
        if p >= 1.0:
            raise ValueError(f"collision probability {p} is outside [0, 1)")
    return ps


def surface_speed(vt_grid: Iterable[float], p_grid: Iterable[float],
                  l: float = 1.0) -> SurfaceGrid:
    """Reynolds numbers over (market speed, collision probability) at a
    fixed spread."""
    xs = list(vt_grid)
    ps = _check_probabilities(p_grid)
    values = [[reynolds_closed_form(v, l, p) for v in xs] for p in ps]
    return SurfaceGrid(x_name="v_t", x_axis=xs, y_axis=ps, values=values,
                       fixed_params={"l": l})


def surface_spread(l_grid: Iterable[float], p_grid: Iterable[float],
                   v_t: float = 1.0) -> SurfaceGrid:
    """Reynolds numbers over (spread, collision probability) at a fixed
    market speed."""
    xs = list(l_grid)
    ps = _check_probabilities(p_grid)
    values = [[reynolds_closed_form(v_t, l, p) for l in xs] for p in ps]
    return SurfaceGrid(x_name="l", x_axis=xs, y_axis=ps, values=values,
                       fixed_params={"v_t": v_t})


@dataclass
class RunSummary:
    """Per-run statistics used by multi-seed comparisons."""

    config: SimConfig
    seed: int
    final_mu: float | None
    final_reynolds: float | None
    max_reynolds: float | None
    regime_counts: dict[str, int]
    error: str | None = None


def _summarize(config: SimConfig) -> RunSummary:
    bundle = run(config)
    counts = {regime.value: 0 for regime in FlowRegime}
    for tick in bundle.ticks:
        counts[tick.regime.value] += 1
    return RunSummary(
        config=config,
        seed=config.seed,
        final_mu=bundle.smoothed_mu[-1],
        final_reynolds=bundle.smoothed_reynolds[-1],
        max_reynolds=max(t.reynolds for t in bundle.ticks),
        regime_counts=counts,
    )


def batch_runs(base: SimConfig, param_grid: Iterable[Mapping],
               seeds: Iterable[int]) -> list[RunSummary]:
    """One summary per (override, seed) cell, in grid-major order.

    A failing cell is reported in its summary's error field; the rest of
    the batch still runs.
    """
    cells = [dict(overrides) for overrides in param_grid]
    if not cells:
        raise ValueError("param_grid must contain at least one cell")
    out: list[RunSummary] = []
    for overrides in cells:
        for seed in seeds:
            config = replace(base, seed=seed, **overrides)
            try:
                out.append(_summarize(config))
            except Exception as exc:
                counts = {regime.value: 0 for regime in FlowRegime}
                out.append(RunSummary(
                    config=config, seed=seed, final_mu=None,
                    final_reynolds=None, max_reynolds=None,
                    regime_counts=counts, error=str(exc)))
    return out
