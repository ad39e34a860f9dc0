import json
import logging
import os
from pathlib import Path
from typing import Any

from dotenv import load_dotenv
from rich.console import Console

from circuits.qaoa import QaoaParams
from routers.sabre_router import RouterParams
from scheduling.scheduler import GateDurations

console = Console()
logger = logging.getLogger(__name__)

ENV_PREFIX = "SWAPBENDER_"
MAX_WORKERS_VAR = f"{ENV_PREFIX}MAX_WORKERS"
LOG_LEVEL_VAR = f"{ENV_PREFIX}LOG_LEVEL"


class Config:
    """Local configuration management using .env files and JSON preferences."""

    def __init__(self, env_file: Path | None = None, config_dir: Path | None = None):
        self._config_dir = config_dir or Path.home() / ".swapbender"
        self._env_file = env_file or self._find_env_file()
        self._config_file = self._config_dir / "config.json"
        self._load_env()
        self._ensure_config_dir()

    def _find_env_file(self) -> Path:
        """Find .env file in current directory or the config directory."""
        local_env = Path(".env")
        if local_env.exists():
            return local_env

        home_env = self._config_dir / ".env"
        if home_env.exists():
            return home_env

        return local_env

    def _load_env(self) -> None:
        """Load environment variables from .env file."""
        if self._env_file.exists():
            load_dotenv(self._env_file)

    def _ensure_config_dir(self) -> None:
        """Create config directory for preferences."""
        self._config_dir.mkdir(parents=True, exist_ok=True)

    @property
    def config_file(self) -> Path:
        return self._config_file

    def get_preferences(self) -> dict[str, Any]:
        """Load user preferences from JSON config file, filling in defaults."""
        prefs = self._get_default_preferences()
        if not self._config_file.exists():
            return prefs

        try:
            with open(self._config_file) as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            console.print(f"[yellow]Warning: Invalid JSON in config file: {e}[/yellow]")
            return prefs
        except OSError as e:
            console.print(f"[yellow]Warning: Could not read config file: {e}[/yellow]")
            return prefs

        if isinstance(data, dict):
            prefs.update(data)
        return prefs

    def set_preference(self, key: str, value: Any) -> None:
        """Set a user preference; the value must match the default's type."""
        defaults = self._get_default_preferences()
        if key not in defaults:
            raise ValueError(
                f"Unknown preference '{key}'. Known: {', '.join(sorted(defaults))}"
            )
        expected = type(defaults[key])
        if expected is float and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if not isinstance(value, expected) or (expected is int and isinstance(value, bool)):
            raise ValueError(
                f"Preference '{key}' expects {expected.__name__}, got {value!r}"
            )

        prefs = self.get_preferences()
        prefs[key] = value
        try:
            self._config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self._config_file, "w") as f:
                json.dump(prefs, f, indent=2)
        except OSError as e:
            raise RuntimeError(f"Failed to save preferences: {e}") from e

    def reset_preferences(self) -> None:
        """Reset preferences to defaults."""
        defaults = self._get_default_preferences()
        self._config_file.parent.mkdir(parents=True, exist_ok=True)
        with open(self._config_file, "w") as f:
            json.dump(defaults, f, indent=2)

    def _get_default_preferences(self) -> dict[str, Any]:
        """Get default preferences."""
        return {
            "lookahead_size": 20,
            "lookahead_weight": 0.5,
            "decay_increment": 0.001,
            "decay_reset_interval": 5,
            "t_1q": 1,
            "t_2q": 10,
            "instances": 100,
            "optimize": True,
            "gamma": 0.4,
            "beta": 0.7,
        }

    def router_params(self, seed: int = 0) -> RouterParams:
        prefs = self.get_preferences()
        return RouterParams(
            lookahead_size=prefs["lookahead_size"],
            lookahead_weight=prefs["lookahead_weight"],
            decay_increment=prefs["decay_increment"],
            decay_reset_interval=prefs["decay_reset_interval"],
            seed=seed,
        )

    def durations(self) -> GateDurations:
        prefs = self.get_preferences()
        return GateDurations(t_1q=prefs["t_1q"], t_2q=prefs["t_2q"])

    def qaoa_params(self) -> QaoaParams:
        prefs = self.get_preferences()
        return QaoaParams(gamma=prefs["gamma"], beta=prefs["beta"])

    def max_workers(self) -> int | None:
        """Worker cap from the environment, or None when unset or invalid."""
        raw = os.getenv(MAX_WORKERS_VAR)
        if not raw:
            return None
        try:
            value = int(raw)
        except ValueError:
            logger.warning("Ignoring %s=%r: not an integer", MAX_WORKERS_VAR, raw)
            return None
        if value < 1:
            logger.warning("Ignoring %s=%r: must be >= 1", MAX_WORKERS_VAR, raw)
            return None
        return value

    def log_level(self) -> str:
        """Get the default log level, read after the .env file is loaded."""
        return os.getenv(LOG_LEVEL_VAR, "WARNING").upper()

    def create_example_env(self) -> Path:
        """Create an example .env file listing the recognised variables."""
        lines = [
            "# Swapbender environment settings",
            "#",
            "# Cap on bench worker processes (defaults to the CPU count)",
            f"# {MAX_WORKERS_VAR}=4",
            "",
            "# Default log level: DEBUG, INFO, WARNING or ERROR",
            f"# {LOG_LEVEL_VAR}=WARNING",
            "",
        ]

        example_file = self._env_file.parent / ".env.example"
        with open(example_file, "w") as f:
            f.write("\n".join(lines))

        console.print(f"Created {example_file}")
        return example_file
