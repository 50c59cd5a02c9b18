"""Configuration management for zetaform."""
import logging
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Optional, Type, TypeVar

import yaml

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class NumericConfig:
    default_K: int = 100000
    default_digits: int = 30


@dataclass
class ScanConfig:
    workers: int = 1
    max_uv: int = 3  # bound for u_i, v_i when the scan is not well-poised
    enumeration_bound: int = 9


@dataclass
class EngineConfig:
    numeric: NumericConfig = field(default_factory=NumericConfig)
    scan: ScanConfig = field(default_factory=ScanConfig)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _section(cls: Type[T], data: Any) -> T:
    if data is None:
        return cls()
    if not isinstance(data, dict):
        raise TypeError(f"section {cls.__name__} must be a mapping, got {type(data).__name__}")
    known = {f.name: f for f in fields(cls)}
    values = {}
    for key, value in data.items():
        if key not in known:
            raise KeyError(f"unknown setting {key!r} in {cls.__name__}")
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"setting {key!r} must be a positive integer, got {value!r}")
        values[key] = value
    return cls(**values)


class ConfigManager:
    """Loads engine defaults from an optional YAML (or JSON) settings file.

    Nothing is read unless a file is passed explicitly, and nothing is ever written.
    """

    def __init__(self, config_file: Optional[Path] = None):
        self.config_file = config_file
        self.engine_config = self.load_config()

    def load_config(self) -> EngineConfig:
        """Load configuration from file, or fall back to defaults."""
        if self.config_file is None:
            return EngineConfig()
        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
            if not isinstance(data, dict):
                raise TypeError("settings file must contain a mapping")
            unknown = set(data) - {"numeric", "scan"}
            if unknown:
                raise KeyError(f"unknown sections {sorted(unknown)}")
            return EngineConfig(
                numeric=_section(NumericConfig, data.get("numeric")),
                scan=_section(ScanConfig, data.get("scan")),
            )
        except (OSError, yaml.YAMLError, TypeError, KeyError, ValueError) as e:
            # If config is invalid, return defaults
            logger.warning("Invalid config file %s, using defaults: %s", self.config_file, e)
            return EngineConfig()

    def get_current_config(self) -> EngineConfig:
        """Get the current configuration."""
        return self.engine_config
