"""
Configuration management.

Settings come from an explicit JSON file (``--config``) or the validated
defaults of :class:`NetlexConfig`; nothing is read from the home directory or
the environment. CLI flags are applied on top as overrides.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger
from pydantic import ValidationError as PydanticValidationError

from netlex.models.config import NetlexConfig
from netlex.models.exceptions import ConfigurationError


def _describe(e: PydanticValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
    )


class ConfigManager:
    """Loads, validates and overrides the netlex configuration."""

    def __init__(self, config_path: Optional[Path] = None):
        self.config_path = Path(config_path) if config_path is not None else None
        self._config: Optional[NetlexConfig] = None

    @property
    def config(self) -> NetlexConfig:
        """Current configuration (lazy loaded)."""
        if self._config is None:
            self.load_config()
        assert self._config is not None
        return self._config

    def load_config(self) -> NetlexConfig:
        """
        Read and validate the config file, or fall back to defaults without one.

        Raises:
            ConfigurationError: If the file is missing, unreadable or invalid
        """
        if self.config_path is None:
            self._config = NetlexConfig()
            return self._config

        logger.info(f"Loading config from: {self.config_path}")
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except FileNotFoundError:
            raise ConfigurationError(f"config file not found: {self.config_path}") from None
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"cannot read {self.config_path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"{self.config_path} must hold a JSON object")

        try:
            self._config = NetlexConfig(**data)
        except PydanticValidationError as e:
            raise ConfigurationError(f"{self.config_path}: {_describe(e)}") from e
        return self._config

    def with_overrides(self, **overrides: Any) -> NetlexConfig:
        """
        The current config with non-``None`` overrides applied and revalidated.

        Raises:
            ConfigurationError: If an override is out of range
        """
        updates = {k: v for k, v in overrides.items() if v is not None}
        if not updates:
            return self.config
        data = self.config.model_dump()
        data.update(updates)
        try:
            self._config = NetlexConfig(**data)
        except PydanticValidationError as e:
            raise ConfigurationError(_describe(e)) from e
        return self._config

    def get_setting(self, key: str, default: Any = None) -> Any:
        return getattr(self.config, key, default)

    def as_dict(self) -> Dict[str, Any]:
        """JSON-ready effective configuration for run manifests."""
        return self.config.model_dump(mode="json")
