import os
import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

logger = logging.getLogger(__name__)

# Get configuration directory from environment variable, or use default if not set
CONFIG_DIR = os.environ.get('LAXFRAC_CONFIG_DIR', None)

COMMANDS = ("check-axioms", "hom", "compose", "two-cell-equal", "verify-coherence",
            "check-lari", "check-bc", "compare-gz")

Command = Literal["check-axioms", "hom", "compose", "two-cell-equal", "verify-coherence",
                  "check-lari", "check-bc", "compare-gz"]

DEFAULT_BOUNDS: Dict[str, int] = {
    "apex_bound": 2,
    "ext_bound": 4,
    "witness_bound": 4,
    "max_search_size": 4,
    "universe_size": 2,
    "seed": 0,
    "sample_size": 8,
}


def replace_env_placeholders(config: Union[Dict[str, Any], List[Any], str, Any]) -> Union[Dict[str, Any], List[Any], str, Any]:
    """
    Recursively replace placeholders like "${ENV_VAR}" in string values
    within a nested configuration structure (dicts, lists, strings)
    with environment variable values. Logs a warning if a placeholder is not found.
    """
    pattern = re.compile(r"\$\{([A-Z0-9_]+)\}")

    def replacer(match: re.Match[str]) -> str:
        env_var_name = match.group(1)
        original_placeholder = match.group(0)
        env_var_value = os.environ.get(env_var_name)
        if env_var_value is None:
            logger.warning(
                f"Environment variable placeholder '{original_placeholder}' was not found in the environment. "
                f"The placeholder string will be used as is."
            )
            return original_placeholder
        return env_var_value

    if isinstance(config, dict):
        return {k: replace_env_placeholders(v) for k, v in config.items()}
    elif isinstance(config, list):
        return [replace_env_placeholders(item) for item in config]
    elif isinstance(config, str):
        return pattern.sub(replacer, config)
    else:
        return config


def _coerce_numbers(config: Dict[str, Any]) -> Dict[str, Any]:
    # placeholders substitute strings; bounds are integers
    coerced = {}
    for key, value in config.items():
        if key in DEFAULT_BOUNDS and isinstance(value, str) and value.lstrip("-").isdigit():
            value = int(value)
        coerced[key] = value
    return coerced


# Load JSON configuration file
def load_json_config(filename):
    try:
        # If environment variable is set, use the directory specified by it
        if CONFIG_DIR:
            config_path = Path(CONFIG_DIR) / filename
        else:
            # Otherwise use default directory
            config_path = Path(__file__).parent / "config" / filename

        logger.info(f"Loading configuration from {config_path}")

        if not config_path.exists():
            logger.warning(f"Configuration file {config_path} does not exist")
            return {}

        with open(config_path, 'r', encoding='utf-8') as f:
            config = json.load(f)
            config = replace_env_placeholders(config)
            return config
    except Exception as e:
        logger.error(f"Error loading configuration file {filename}: {str(e)}")
        return {}


# Load search bounds and sampling defaults
def load_bounds_config() -> Dict[str, int]:
    bounds = dict(DEFAULT_BOUNDS)
    loaded = load_json_config("bounds.json")
    if loaded:
        bounds.update({k: v for k, v in _coerce_numbers(loaded).items() if k in DEFAULT_BOUNDS})
    return bounds


# Load the registry of report anchors
def load_checks_config() -> Dict[str, str]:
    loaded = load_json_config("checks.json")
    if not isinstance(loaded, dict):
        logger.warning("Check registry 'checks.json' is malformed. Anchors fall back to check names.")
        return {}
    return {str(k): str(v) for k, v in loaded.items()}


# Load the number of draws per sampled check
def load_samples_config() -> Dict[str, int]:
    loaded = load_json_config("samples.json")
    if not isinstance(loaded, dict):
        logger.warning("Sample registry 'samples.json' is malformed. Every check draws sample_size instances.")
        return {}
    counts = {}
    for group, value in loaded.items():
        try:
            counts[str(group)] = int(value)
        except (TypeError, ValueError):
            logger.warning(f"Ignoring non-integer sample count {value!r} for {group}")
    return counts


def sample_counts() -> Dict[str, int]:
    return dict(configs.get("samples", {}))


def anchor_for(name: str) -> str:
    return configs.get("checks", {}).get(name, name)


class RunConfig(BaseModel):
    """
    Effective configuration of one CLI run.
    """
    model: str = Field(..., description="Path to the model file")
    command: Command = Field(..., description="Command to execute")
    apex_bound: int = Field(DEFAULT_BOUNDS["apex_bound"], gt=0, description="Largest apex size when enumerating cospans")
    ext_bound: int = Field(DEFAULT_BOUNDS["ext_bound"], gt=0, description="Largest extension codomain for ≈ searches")
    witness_bound: int = Field(DEFAULT_BOUNDS["witness_bound"], gt=0, description="Largest codomain for axiom witness searches")
    max_search_size: int = Field(DEFAULT_BOUNDS["max_search_size"], gt=0, description="Hard cap on searched poset sizes")
    universe_size: int = Field(DEFAULT_BOUNDS["universe_size"], ge=0, description="Size of the enumerated poset universe")
    seed: int = Field(DEFAULT_BOUNDS["seed"], description="Seed for sampled checks")
    sample_size: int = Field(DEFAULT_BOUNDS["sample_size"], gt=0, description="Draws for checks without their own count")
    samples: Dict[str, int] = Field(default_factory=sample_counts, description="Draws per sampled check group")
    out: Optional[str] = Field(None, description="Report path; standard output when omitted")
    format: Literal["json", "markdown"] = Field("json", description="Report format")
    args: Dict[str, Any] = Field(default_factory=dict, description="Command arguments, e.g. cospans or objects by name")
    force: bool = Field(False, description="Allow witness_bound above max_search_size")

    @model_validator(mode="after")
    def _check_bounds(self) -> "RunConfig":
        if self.witness_bound > self.max_search_size and not self.force:
            raise ValueError(f"witness_bound {self.witness_bound} exceeds max_search_size "
                             f"{self.max_search_size}; pass --force to allow it")
        return self

    def report_config(self) -> Dict[str, Any]:
        """The part of the configuration that determines the report."""
        return self.model_dump(include={"apex_bound", "ext_bound", "witness_bound", "max_search_size",
                                        "universe_size", "seed", "sample_size"})


def build_run_config(overrides: Dict[str, Any]) -> RunConfig:
    """CLI values override file defaults, which override built-in defaults.

    An explicit ``sample_size`` replaces the per-check counts of samples.json.

    Raises ValueError (a pydantic ValidationError) for misused bounds.
    """
    values: Dict[str, Any] = dict(configs.get("bounds", DEFAULT_BOUNDS))
    values.update({k: v for k, v in overrides.items() if v is not None})
    if overrides.get("sample_size") is not None:
        values["samples"] = {}
    return RunConfig(**values)


# Initialize empty configuration
configs = {}

# Load all configuration files
bounds_config = load_bounds_config()
checks_config = load_checks_config()

configs["bounds"] = bounds_config
if checks_config:
    configs["checks"] = checks_config

samples_config = load_samples_config()
if samples_config:
    configs["samples"] = samples_config
