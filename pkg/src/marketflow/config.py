"""Simulation configuration."""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class SimConfig:
    """Every knob a run needs. Defaults reproduce the narrow-spread,
    high-collision reference experiment."""

    initial_bid: int = 3681
    initial_spread: int = 1
    m: float = 2000.0
    h: float = 10.0
    collision_probability: float = 0.99
    steps: int = 450
    seed: int = 0
    smoothing_window: int = 20
    viscosity_clamp: float = 2.0

    def validate(self) -> "SimConfig":
        if self.initial_bid < 1:
            raise ValueError("initial_bid must be >= 1")
        if self.initial_spread < 1:
            raise ValueError("initial_spread must be >= 1")
        if not self.m > 0:
            raise ValueError("m must be > 0")
        if not self.h > 0:
            raise ValueError("h must be > 0")
        if not 0.0 <= self.collision_probability <= 1.0:
            raise ValueError("collision_probability must be in [0, 1]")
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")
        # smoothing_window may exceed steps; the moving average truncates
        # at the series head, so a short run still smooths sensibly.
        if self.smoothing_window < 1:
            raise ValueError("smoothing_window must be >= 1")
        if not self.viscosity_clamp > 0:
            raise ValueError("viscosity_clamp must be > 0")
        return self


CONFIG_FIELDS: dict[str, type] = {f.name: f.type for f in fields(SimConfig)}

_INT_FIELDS = {"initial_bid", "initial_spread", "steps", "seed", "smoothing_window"}
_FLOAT_FIELDS = {"m", "h", "collision_probability", "viscosity_clamp"}


def coerce_field(key: str, raw: str):
    """Parse one config value from text, naming the key on failure."""
    if key in _INT_FIELDS:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"invalid integer for {key}: {raw!r}") from None
    if key in _FLOAT_FIELDS:
        try:
            return float(raw)
        except ValueError:
            raise ValueError(f"invalid number for {key}: {raw!r}") from None
    raise ValueError(f"unknown config key: {key}")
