"""Run configuration: flags > SCX_* environment > config file > defaults."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

ENV_PREFIX = "SCX_"
DEFAULT_CONFIG_FILE = "scx.toml"


@dataclass(frozen=True)
class Config:
    brute_cap_bits: int = 24
    coset_cap_bits: int = 20
    eig_tol: float = 1e-10
    zero_band: float = 1e-8
    seed: int = 0
    workers: int = 1


def _coerce(name: str, value):
    typ = {f.name: f.type for f in fields(Config)}[name]
    return float(value) if typ in (float, "float") else int(value)


def load_config(flags: dict | None = None, env=None, path: str | Path | None = None) -> Config:
    """Merge configuration sources; unknown keys in files or flags are errors."""
    env = os.environ if env is None else env
    names = {f.name for f in fields(Config)}
    merged: dict = {}
    if path is None and Path(DEFAULT_CONFIG_FILE).is_file():
        path = DEFAULT_CONFIG_FILE
    if path is not None:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        merged.update(data)
    for name in names:
        key = ENV_PREFIX + name.upper()
        if key in env:
            merged[name] = env[key]
    for name, value in (flags or {}).items():
        if value is None:
            continue
        if name not in names:
            raise ValueError(f"unknown config key {name!r}")
        merged[name] = value
    return replace(Config(), **{k: _coerce(k, v) for k, v in merged.items()})
