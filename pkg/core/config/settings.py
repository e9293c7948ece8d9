"""
Runtime settings: constants, overridden by ZEROCAP_* environment variables
(a .env file is honoured), overridden by explicit CLI values.
"""

import os
from typing import Any, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict

from core.config import constants

load_dotenv()

ENV_PREFIX = "ZEROCAP_"


class Settings(BaseModel):
    """Tunables shared by every subcommand."""

    model_config = ConfigDict(frozen=True)

    perron_tol: float = constants.PERRON_TOL
    perron_max_iter: int = constants.PERRON_MAX_ITER
    subset_cap: int = constants.SUBSET_CAP
    enumeration_cap: int = constants.ENUMERATION_CAP
    codebook_cap: int = constants.CODEBOOK_CAP
    grid_points: int = constants.GRID_POINTS
    refine_tol: float = constants.REFINE_TOL
    oracle_max_len: int = constants.ORACLE_MAX_LEN
    scheme_blocklength_cap: int = constants.SCHEME_BLOCKLENGTH_CAP


def _from_env(name: str, kind: type) -> Optional[Any]:
    variable = ENV_PREFIX + name.upper()
    raw = os.getenv(variable)
    if raw is None or not raw.strip():
        return None
    try:
        # float() first so "1e6" works for integer settings too
        value = float(raw)
        return int(value) if kind is int else value
    except ValueError:
        raise ValueError(f"{variable}={raw!r} is not a number")


def load_settings(**overrides: Any) -> Settings:
    """
    Build the effective settings.

    overrides: Explicit values (usually CLI flags); None means "not given".

    Returns a frozen Settings model.
    """
    values = {}
    for name, field in Settings.model_fields.items():
        env_value = _from_env(name, field.annotation)
        if env_value is not None:
            values[name] = env_value
    for name, value in overrides.items():
        if name not in Settings.model_fields:
            raise ValueError(f"Unknown setting: {name}")
        if value is not None:
            values[name] = value
    return Settings(**values)
