# src/utils/config.py
import logging
from importlib.resources import files
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

# shipped as package data next to the code
DEFAULT_CONFIG_PATH = Path(str(files("src") / "config" / "default.yaml"))


class Settings(BaseSettings):
    """
    Runtime settings

    Priority, lowest first: field defaults, YAML file, .env file, environment
    variables (prefix MJUGGLE_). The CLI applies its flags on top.
    """

    model_config = SettingsConfigDict(
        env_prefix="MJUGGLE_", env_file=".env", extra="ignore"
    )

    # feasibility guards
    max_matrix_balls: int = Field(default=13, ge=0)
    max_charpoly_balls: int = Field(default=8, ge=0)
    max_oracle_balls: int = Field(default=4, ge=0)
    max_oracle_period: int = Field(default=6, ge=1)
    max_containment_balls: int = Field(default=5, ge=1)
    force: bool = False

    cache_dir: Optional[Path] = None
    threads: int = Field(default=1, ge=1)

    log_level: str = "INFO"
    log_file: Optional[str] = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        # YAML values arrive as init kwargs; environment wins over them
        return env_settings, dotenv_settings, init_settings, file_secret_settings


def _read_yaml(path: Path) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a mapping at top level")
    # sections are for readability only
    flat: Dict[str, Any] = {}
    for key, value in data.items():
        if isinstance(value, dict):
            flat.update(value)
        else:
            flat[key] = value
    return flat


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Load settings from a YAML file (default src/config/default.yaml) plus env"""
    config_path = Path(path) if path else DEFAULT_CONFIG_PATH
    values: Dict[str, Any] = {}
    if config_path.exists():
        values = _read_yaml(config_path)
        logger.debug(f"Loaded settings file {config_path}")
    elif path:
        raise FileNotFoundError(f"Config file not found: {config_path}")
    return Settings(**values)
