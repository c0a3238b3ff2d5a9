"""Configuration settings for the Betti engine"""
import os
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.errors import ConfigError

# Label Configuration
MAX_LABEL = 64

# Enumeration Bounds
MAX_ENUMERATION_GROUND = 16
MAX_HOMOLOGY_GROUND = 10
MAX_COMPLEX_FACES = 500_000
VERIFY_EL_MAX_GROUND = 8
A_NUMBER_MAX_VERTICES = 12
HOCHSCHILD_HOMOLOGY_MAX = 10

# Linear Algebra Configuration
DENSE_RANK_LIMIT = 10_000
HOMOLOGY_FAST_PATH = False

# Worker Configuration
DEFAULT_THREADS = 1

# Flask Configuration
FLASK_HOST = "0.0.0.0"
FLASK_PORT = 5000
FLASK_DEBUG = False

# Logging Configuration
LOG_LEVEL = "WARNING"

CONFIG_ENV_VAR = "BETTI_ENGINE_CONFIG"


class EngineSettings(BaseModel):
    """Runtime settings; defaults mirror the module constants"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    max_label: int = Field(default=MAX_LABEL, ge=1, le=MAX_LABEL)
    max_enumeration_ground: int = Field(default=MAX_ENUMERATION_GROUND, ge=1, le=MAX_LABEL)
    max_homology_ground: int = Field(default=MAX_HOMOLOGY_GROUND, ge=1, le=MAX_LABEL)
    max_complex_faces: int = Field(default=MAX_COMPLEX_FACES, ge=1)
    verify_el_max_ground: int = Field(default=VERIFY_EL_MAX_GROUND, ge=0, le=MAX_LABEL)
    a_number_max_vertices: int = Field(default=A_NUMBER_MAX_VERTICES, ge=0, le=MAX_LABEL)
    hochschild_homology_max: int = Field(default=HOCHSCHILD_HOMOLOGY_MAX, ge=1, le=MAX_LABEL)
    dense_rank_limit: int = Field(default=DENSE_RANK_LIMIT, ge=0)
    homology_fast_path: bool = HOMOLOGY_FAST_PATH
    threads: int = Field(default=DEFAULT_THREADS, ge=1)
    flask_host: str = FLASK_HOST
    flask_port: int = Field(default=FLASK_PORT, ge=1, le=65535)
    flask_debug: bool = FLASK_DEBUG
    log_level: str = LOG_LEVEL


def load_settings(path: Optional[str] = None, **overrides: Any) -> EngineSettings:
    """
    Build settings from defaults, an optional YAML file and keyword overrides.

    Args:
        path: YAML file with a flat mapping of setting names. Falls back to the
            file named by BETTI_ENGINE_CONFIG when omitted.
        **overrides: Values that win over the file (None values are ignored).

    Returns:
        A validated, frozen EngineSettings.
    """
    data: Dict[str, Any] = {}
    path = path or os.environ.get(CONFIG_ENV_VAR)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as f:
                loaded = yaml.safe_load(f)
        except OSError as e:
            raise ConfigError(f"cannot read config file {path}: {e}") from e
        except yaml.YAMLError as e:
            raise ConfigError(f"invalid YAML in {path}: {e}") from e
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ConfigError(f"config file {path} must hold a mapping")
        data.update({str(k).replace("-", "_"): v for k, v in loaded.items()})

    data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return EngineSettings(**data)
    except ValidationError as e:
        raise ConfigError(f"invalid settings: {e.errors(include_url=False)}") from e
