"""Configuration parser for entrydeterrence runs."""

import copy
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from entrydeterrence.errors import ConfigError

FLAT_MODEL_KEYS = ("alpha", "beta", "theta", "phi", "c")


class ConfigParser:
    """Parses configuration files and merges them over the defaults."""

    def __init__(self):
        """Initialize the config parser."""
        self.logger = logging.getLogger("entrydeterrence.config")
        self.default_config = self._get_default_config()

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration values (the reference underproduction scenario)."""
        return {
            "model": {
                "alpha": 10.0,
                "beta": 2.0,
                "theta": 2.0,
                "phi": 0.5,
                "c": 2.0,
            },
            "entry_cost": 5.0,
            "entry_cost_range": None,
            "sweep_phi": None,
            "sweep_theta": None,
            "numerics": {
                "equality_tolerance": 1e-12,
                "profit_tolerance": 1e-9,
            },
            "oracle": {
                "price_step_factor": 1e-3,
                "output_step_factor": 1e-3,
                "price_step": None,
                "output_step": None,
                "x_points": 100,
                "r_points": 121,
            },
            "figure": {
                "samples": 21,
                "x_max": None,
            },
            "output": {
                "format": "csv",
                "path": None,
            },
        }

    def parse(self, config_path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
        """Parse configuration from file or use defaults.

        Args:
            config_path: Path to a YAML, JSON or JSON-lines configuration file

        Returns:
            Configuration dictionary
        """
        if not config_path:
            self.logger.info("No config path provided, using default configuration")
            return copy.deepcopy(self.default_config)

        path = Path(config_path) if isinstance(config_path, str) else config_path
        if not path.exists():
            raise ConfigError(f"Config file not found: {path}")

        try:
            with open(path, "r") as f:
                suffix = path.suffix.lower()
                if suffix == ".json":
                    config = json.load(f)
                elif suffix == ".jsonl":
                    lines = [line for line in f if line.strip()]
                    config = json.loads(lines[0]) if lines else {}
                else:  # Default to YAML
                    config = yaml.safe_load(f) or {}
        except (OSError, ValueError, yaml.YAMLError) as e:
            raise ConfigError(f"Failed to parse config from {path}: {e}") from e

        if not isinstance(config, dict):
            raise ConfigError(f"Config file {path} must contain a mapping")

        self.logger.info(f"Loaded configuration from {path}")
        return self._merge_with_defaults(self._normalise(config))

    def _normalise(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Turn a flat solve record (alpha, ..., c, R) into the nested layout."""
        if not any(key in config for key in FLAT_MODEL_KEYS):
            return config
        nested = {key: value for key, value in config.items() if key not in FLAT_MODEL_KEYS and key != "R"}
        nested = {key: value for key, value in nested.items() if key in self.default_config}
        nested["model"] = {key: config[key] for key in FLAT_MODEL_KEYS if key in config}
        if "R" in config:
            nested["entry_cost"] = config["R"]
        return nested

    def _merge_with_defaults(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Merge provided config with defaults for missing values."""
        result = copy.deepcopy(self.default_config)

        # Simple recursive merge
        def merge_dicts(default_dict, override_dict):
            for key, value in override_dict.items():
                if key in default_dict and isinstance(value, dict) and isinstance(default_dict[key], dict):
                    merge_dicts(default_dict[key], value)
                else:
                    default_dict[key] = value

        merge_dicts(result, config)
        return result
