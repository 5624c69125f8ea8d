"""
config.py
=========

Loading of the YAML configuration files under ``config/``.  The defaults in
``config/default.yaml`` are read first and any override file is merged on
top of them section by section, so an override only needs to mention the
values it changes.

The resolved values are exposed as a frozen :class:`Settings` object.  The
single environment variable consulted is ``CONGRUENCE_LIFT_THREADS`` which
replaces ``parallel.n_jobs``.

Library functions that are called without an explicit guard, sample count
or worker count read it from :func:`current_settings`, which resolves the
file selected with :func:`use_config` (the defaults when none is).
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterator, Optional

import yaml

from .errors import MalformedInputError

PROJECT_ROOT = Path(__file__).resolve().parents[1]
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config" / "default.yaml"
THREADS_ENV_VAR = "CONGRUENCE_LIFT_THREADS"


@dataclass(frozen=True)
class Settings:
    """Resolved runtime settings.

    Attributes
    ----------
    group_candidates : int
        Cap on candidate matrices for exhaustive group enumeration.
    closure_elements : int
        Cap on the size of an elementary-closure search.
    usc_candidates : int
        Cap on unital sets inspected by the finite USC checker.
    pf_tuples : int
        Cap on residue tuples scanned by projective-space enumeration.
    usc_max_set_size : int
        Default bound K for the finite USC checker.
    samples : int
        Default sample count for sampling checks.
    word_length : int
        Length of random elementary words.
    n_jobs : int
        joblib worker count.
    log_level : str
        Console log level.
    """

    group_candidates: int = 200_000
    closure_elements: int = 50_000
    usc_candidates: int = 200_000
    pf_tuples: int = 500_000
    usc_max_set_size: int = 3
    samples: int = 50
    word_length: int = 12
    n_jobs: int = 1
    log_level: str = "WARNING"


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        elif value is not None:
            merged[key] = value
    return merged


def _read_yaml(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise MalformedInputError(f"could not parse {path}: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise MalformedInputError(f"{path} must contain a mapping at top level")
    # Sections with every entry commented out load as None
    return {k: (v if v is not None else {}) for k, v in data.items()}


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """Load the default configuration and merge an optional override file.

    Parameters
    ----------
    config_path : str, optional
        Path to a YAML file whose sections override ``config/default.yaml``.

    Returns
    -------
    dict
        The merged configuration tree.
    """
    config = _read_yaml(DEFAULT_CONFIG_PATH) if DEFAULT_CONFIG_PATH.exists() else {}
    if config_path:
        path = Path(config_path)
        if not path.exists():
            raise MalformedInputError(f"config file {config_path} does not exist")
        config = _merge(config, _read_yaml(path))
    return config


def load_settings(config_path: Optional[str] = None) -> Settings:
    """Return :class:`Settings` built from the YAML files and the environment."""
    config = load_config(config_path)
    guards = config.get("guards", {})
    defaults = Settings()
    n_jobs = int(config.get("parallel", {}).get("n_jobs", defaults.n_jobs))
    env_threads = os.environ.get(THREADS_ENV_VAR)
    if env_threads:
        try:
            n_jobs = int(env_threads)
        except ValueError as exc:
            raise MalformedInputError(
                f"{THREADS_ENV_VAR} must be an integer, got {env_threads!r}"
            ) from exc
    return Settings(
        group_candidates=int(guards.get("group_candidates", defaults.group_candidates)),
        closure_elements=int(guards.get("closure_elements", defaults.closure_elements)),
        usc_candidates=int(guards.get("usc_candidates", defaults.usc_candidates)),
        pf_tuples=int(guards.get("pf_tuples", defaults.pf_tuples)),
        usc_max_set_size=int(config.get("usc", {}).get("max_set_size", defaults.usc_max_set_size)),
        samples=int(config.get("sampling", {}).get("samples", defaults.samples)),
        word_length=int(config.get("sampling", {}).get("word_length", defaults.word_length)),
        n_jobs=n_jobs,
        log_level=str(config.get("logging", {}).get("level", defaults.log_level)).upper(),
    )


_active_config_path: Optional[str] = None


@lru_cache(maxsize=8)
def _settings_for(config_path: Optional[str], env_threads: Optional[str]) -> Settings:
    # env_threads is part of the cache key only; load_settings reads it again
    return load_settings(config_path)


def current_settings() -> Settings:
    """Settings of the active configuration file and the current environment."""
    return _settings_for(_active_config_path, os.environ.get(THREADS_ENV_VAR))


def use_config(config_path: Optional[str]) -> Settings:
    """Select the configuration file library defaults are read from.

    ``None`` goes back to ``config/default.yaml``.  The file is loaded
    before it becomes active, so a broken file leaves the previous one in
    place.
    """
    global _active_config_path
    settings = load_settings(config_path)
    _active_config_path = config_path
    _settings_for.cache_clear()
    return settings


@contextmanager
def using_config(config_path: Optional[str]) -> Iterator[Settings]:
    """Make ``config_path`` active for the duration of a ``with`` block."""
    global _active_config_path
    previous = _active_config_path
    settings = use_config(config_path)
    try:
        yield settings
    finally:
        _active_config_path = previous
        _settings_for.cache_clear()
