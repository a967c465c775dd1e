# src/config_loader.py

import json
import logging
import os
import sys
from typing import Dict, Any

from dotenv import load_dotenv

load_dotenv()

DEFAULT_CONFIG_PATH = os.getenv("QGT_CONFIG_PATH", "config/qgt_config.json")

logger = logging.getLogger(__name__)


def load_qgt_config(config_path: str = DEFAULT_CONFIG_PATH) -> Dict[str, Any]:
    """
    Load toolkit configuration from a JSON file.

    Sections missing from the file are filled from the defaults, so callers
    can always index the documented keys.

    Args:
        config_path: Path to the configuration file

    Returns:
        Dictionary containing configuration settings
    """
    defaults = get_default_config()
    try:
        if not os.path.exists(config_path):
            logger.debug("configuration file %s not found, using defaults", config_path)
            return defaults

        with open(config_path, 'r') as f:
            config = json.load(f)

        for section, values in defaults.items():
            merged = dict(values)
            merged.update(config.get(section, {}))
            config[section] = merged

        logger.debug("loaded configuration from %s", config_path)
        return config

    except (OSError, ValueError) as e:
        print(f"⚠️ Error loading configuration {config_path}: {e}", file=sys.stderr)
        print("Using default configuration", file=sys.stderr)
        return defaults


def get_default_config() -> Dict[str, Any]:
    """
    Get default configuration settings.
    """
    return {
        "arithmetic_settings": {
            "default_q": "1/2",
            "euler_terms": 40,
            "description": "Rational q in (0,1) used when --q is not given"
        },
        "enumeration_settings": {
            "path_cap": 10_000_000
        },
        "extreme_settings": {
            "epsilon": "1/10000",
            "cap": 12
        },
        "sampling_settings": {
            "seed": 7,
            "count": 1000
        },
        "verify_settings": {
            "default_suite": "all",
            "seed": 7,
            "budget_ms": 600_000
        },
        "debug_settings": {
            "enable_debug_logging": False
        }
    }


def save_qgt_config(config: Dict[str, Any], config_path: str = DEFAULT_CONFIG_PATH) -> bool:
    """
    Save toolkit configuration to a JSON file.

    Args:
        config: Configuration dictionary to save
        config_path: Path to save the configuration file

    Returns:
        True if successful, False otherwise
    """
    try:
        directory = os.path.dirname(config_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(config_path, 'w') as f:
            json.dump(config, f, indent=2)

        logger.debug("configuration saved to %s", config_path)
        return True

    except OSError as e:
        print(f"❌ Error saving configuration: {e}", file=sys.stderr)
        return False


def update_config_section(section: str, key: str, value: Any, config_path: str = DEFAULT_CONFIG_PATH) -> bool:
    """
    Update a specific configuration value.

    Args:
        section: Configuration section (e.g., 'extreme_settings')
        key: Configuration key within the section
        value: New value to set
        config_path: Path to the configuration file

    Returns:
        True if successful, False otherwise
    """
    config = load_qgt_config(config_path)
    config.setdefault(section, {})[key] = value
    return save_qgt_config(config, config_path)


def get_config_value(section: str, key: str, config_path: str = DEFAULT_CONFIG_PATH) -> Any:
    """
    Get a specific configuration value.

    Args:
        section: Configuration section
        key: Configuration key within the section
        config_path: Path to the configuration file

    Returns:
        Configuration value or None if not found
    """
    config = load_qgt_config(config_path)
    return config.get(section, {}).get(key)


def verify_budget_ms(config: Dict[str, Any]) -> int:
    """Runtime cap for `verify`; QGT_VERIFY_BUDGET_MS wins over the file."""
    env_value = os.getenv("QGT_VERIFY_BUDGET_MS")
    if env_value:
        try:
            return int(env_value)
        except ValueError:
            print(f"⚠️ Ignoring malformed QGT_VERIFY_BUDGET_MS={env_value!r}", file=sys.stderr)
    return int(config["verify_settings"]["budget_ms"])


def configure_logging(config: Dict[str, Any]) -> None:
    """Route library logging to stderr at the level the debug flag selects."""
    debug = config.get("debug_settings", {}).get("enable_debug_logging", False)
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
