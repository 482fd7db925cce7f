"""Named experiment scenarios and the plain-text scenario file format.

A scenario file holds one scenario as ``key = value`` lines (``#``
comments and blank lines allowed). The key set is fixed; unknown keys
are rejected so typos cannot silently fall back to defaults. The four
built-in scenarios reproduce the reference measurement campaign: a
variance-matched relay placement, the two generic relay placements with
swapped BS-relay / relay-UE2 distances, and the outage-certain power
split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import ConfigError, SystemConfig, db_to_linear

# Keys of a bare system-config file (one scenario per file).
CONFIG_KEYS = (
    "total_power_db",
    "noise_power",
    "lambda1",
    "lambda_relay",
    "rate_ue1",
    "rate_ue2",
    "d_bs_ue1",
    "d_bs_relay",
    "d_relay_ue1",
    "d_relay_ue2",
    "d_ref",
    "path_loss_exp",
)

# A full scenario file adds the experiment controls.
SCENARIO_ONLY_KEYS = ("name", "snr_grid_db", "n_trials", "seed")
SCENARIO_KEYS = CONFIG_KEYS + SCENARIO_ONLY_KEYS

DEFAULT_SNR_GRID_DB = (10.0, 15.0, 20.0, 25.0, 30.0, 35.0)
DEFAULT_N_TRIALS = 100_000
DEFAULT_SEED = 1


@dataclass(frozen=True)
class Scenario:
    name: str
    cfg: SystemConfig
    snr_grid_db: tuple[float, ...]
    n_trials: int
    seed: int

    def __post_init__(self):
        if not self.name:
            raise ConfigError("scenario name must not be empty")
        if not self.snr_grid_db:
            raise ConfigError("snr_grid_db must not be empty")
        if list(self.snr_grid_db) != sorted(self.snr_grid_db):
            raise ConfigError("snr_grid_db must be sorted ascending")
        if self.n_trials < 1:
            raise ConfigError("n_trials must be >= 1")
        if self.seed < 0:
            raise ConfigError("seed must be >= 0")


def _base_cfg(**overrides) -> SystemConfig:
    params = dict(
        total_power=db_to_linear(30.0),
        noise_power=1.0,
        lambda1=0.2,
        lambda_relay=0.3,
        rate_ue1=1.0,
        rate_ue2=0.7,
        d_bs_ue1=30.0,
        d_bs_relay=30.0,
        d_relay_ue1=30.0,
        d_relay_ue2=45.0,
        d_ref=20.0,
        path_loss_exp=2.0,
    )
    params.update(overrides)
    return SystemConfig(**params)


# Variance-matched relay-UE1 distance: solves
# (d1/d0)^-a == lambda * (d/d0)^-a  ->  d = d0*sqrt(lambda)*... for a = 2:
# d = d_bs_ue1 * sqrt(lambda_relay); entered analytically, the rounded
# 16.43 m would miss the matched branch by ~3e-4 relative.
_D_R1_MATCHED = 30.0 * math.sqrt(0.3)


def builtin_scenarios() -> dict[str, Scenario]:
    mk = lambda name, cfg: Scenario(
        name=name, cfg=cfg, snr_grid_db=DEFAULT_SNR_GRID_DB,
        n_trials=DEFAULT_N_TRIALS, seed=DEFAULT_SEED)
    return {
        "case-a": mk("case-a", _base_cfg(d_relay_ue1=_D_R1_MATCHED)),
        "case-b1": mk("case-b1", _base_cfg()),
        "case-b2": mk("case-b2", _base_cfg(d_bs_relay=45.0, d_relay_ue2=30.0)),
        "case-c": mk("case-c", _base_cfg(lambda1=0.4)),
    }


def _parse_kv_lines(text: str, path: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in entries:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        entries[key] = value
    return entries


def _to_float(entries, key, path) -> float:
    try:
        return float(entries[key])
    except ValueError as exc:
        raise ConfigError(f"{path}: key {key!r}: {exc}") from exc


def _cfg_from_entries(entries: dict[str, str], path: str) -> SystemConfig:
    return SystemConfig(
        total_power=db_to_linear(_to_float(entries, "total_power_db", path)),
        noise_power=_to_float(entries, "noise_power", path),
        lambda1=_to_float(entries, "lambda1", path),
        lambda_relay=_to_float(entries, "lambda_relay", path),
        rate_ue1=_to_float(entries, "rate_ue1", path),
        rate_ue2=_to_float(entries, "rate_ue2", path),
        d_bs_ue1=_to_float(entries, "d_bs_ue1", path),
        d_bs_relay=_to_float(entries, "d_bs_relay", path),
        d_relay_ue1=_to_float(entries, "d_relay_ue1", path),
        d_relay_ue2=_to_float(entries, "d_relay_ue2", path),
        d_ref=_to_float(entries, "d_ref", path),
        path_loss_exp=_to_float(entries, "path_loss_exp", path),
    )


def _check_keys(entries: dict[str, str], expected, path: str) -> None:
    unknown = sorted(set(entries) - set(expected))
    if unknown:
        raise ConfigError(f"{path}: unknown keys {unknown} (allowed: {sorted(expected)})")
    missing = sorted(set(expected) - set(entries))
    if missing:
        raise ConfigError(f"{path}: missing keys {missing}")


def load_config_file(path: str) -> SystemConfig:
    """Parse a bare 12-key system-config file."""
    with open(path, "r", encoding="utf-8") as fh:
        entries = _parse_kv_lines(fh.read(), path)
    _check_keys(entries, CONFIG_KEYS, path)
    return _cfg_from_entries(entries, path)


def load_scenario_file(path: str) -> Scenario:
    """Parse a 16-key scenario file (config keys plus experiment controls)."""
    with open(path, "r", encoding="utf-8") as fh:
        entries = _parse_kv_lines(fh.read(), path)
    _check_keys(entries, SCENARIO_KEYS, path)
    try:
        grid = tuple(float(tok) for tok in entries["snr_grid_db"].split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"{path}: snr_grid_db: {exc}") from exc
    try:
        n_trials = int(entries["n_trials"])
        seed = int(entries["seed"])
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    return Scenario(
        name=entries["name"],
        cfg=_cfg_from_entries(entries, path),
        snr_grid_db=grid,
        n_trials=n_trials,
        seed=seed,
    )


def resolve_scenario(name_or_path: str) -> Scenario:
    """A built-in scenario by name, or a scenario file by path."""
    builtins = builtin_scenarios()
    if name_or_path in builtins:
        return builtins[name_or_path]
    import os

    if os.path.exists(name_or_path):
        return load_scenario_file(name_or_path)
    raise ConfigError(
        f"unknown scenario {name_or_path!r}; built-ins: {sorted(builtins)} "
        "(or pass a scenario file path)"
    )
