import hashlib
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from bounded_credible.schemas.config import RunConfig

OUTPUT_DIR_ENV = "BOUNDED_CREDIBLE_OUTPUT_DIR"
CONFIG_HASH_LENGTH = 16


def get_output_dir() -> Optional[str]:
    return os.getenv(OUTPUT_DIR_ENV)


def load_run_config(config_path: Optional[str], **flags: Any) -> RunConfig:
    """
    Defaults, then the JSON file at config_path, then every flag that was
    given (not None).
    """
    values: Dict[str, Any] = {}

    if config_path is not None:
        with open(config_path, "r") as config_file:
            values.update(json.load(config_file))

    values.update({key: value for key, value in flags.items() if value is not None})

    return RunConfig.parse_obj(values)


def config_hash(config: RunConfig) -> str:
    canonical = config.json(exclude={"output"}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:CONFIG_HASH_LENGTH]


def resolve_output_path(config: RunConfig) -> Optional[Path]:
    if config.output is not None:
        return Path(config.output)

    output_dir = get_output_dir()
    if output_dir is None:
        return None

    extension = config.format.value
    return Path(output_dir) / f"{config.command.value}-{config_hash(config)}.{extension}"
