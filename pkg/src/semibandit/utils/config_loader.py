"""Configuration loader utility."""

import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import yaml

from ..exceptions import ConfigError


def read_yaml_mapping(path: Union[str, Path]) -> Tuple[Dict[str, Any], Dict[str, int]]:
    """
    Read a YAML file whose top level is a mapping.

    Args:
        path: File to read

    Returns:
        Tuple of (data, line number of each top-level key)

    Raises:
        ConfigError: If the file is missing, is not valid YAML or is not a
            mapping. Syntax errors carry the offending line number.
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Configuration file not found: {path}")
    text = path.read_text(encoding="utf-8")
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        line = mark.line + 1 if mark is not None else None
        raise ConfigError(f"Invalid YAML: {e.problem or e}", line, str(path))
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML: {e}", source=str(path))

    if data is None:
        return {}, {}
    if not isinstance(data, dict):
        raise ConfigError("Top level must be a mapping of keys to values", 1, str(path))

    lines: Dict[str, int] = {}
    if isinstance(node, yaml.MappingNode):
        for key_node, _ in node.value:
            lines[str(key_node.value)] = key_node.start_mark.line + 1
    return data, lines


def read_number_list(path: Union[str, Path], what: str = "numbers") -> np.ndarray:
    """
    Read whitespace-separated floats; lines may hold any number of values.

    Text after '#' on a line is ignored.

    Raises:
        ConfigError: If the file is missing or a token is not a number, with
            the line of the offending token
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"{what.capitalize()} file not found: {path}")
    values: List[float] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            for token in raw.split("#", 1)[0].split():
                try:
                    values.append(float(token))
                except ValueError:
                    raise ConfigError(f"Cannot parse {what}: {token!r} is not a number",
                                      line_number, str(path))
    return np.asarray(values, dtype=float)


CONFIG_DIR_ENV = "SEMIBANDIT_CONFIG_DIR"


def default_config_dir() -> Path:
    """
    Directory holding ``default.yaml`` and the experiment configs.

    ``$SEMIBANDIT_CONFIG_DIR`` wins, then ``./config`` when it exists, then
    the ``config/`` directory of a source checkout.
    """
    override = os.environ.get(CONFIG_DIR_ENV)
    if override:
        return Path(override)
    local = Path.cwd() / "config"
    if local.is_dir():
        return local
    return Path(__file__).resolve().parents[3] / "config"


class ConfigLoader:
    """Reads and caches YAML files from one config directory."""

    def __init__(self, config_dir: Optional[Union[str, Path]] = None):
        self.config_dir = Path(config_dir) if config_dir is not None else default_config_dir()
        self._cache: Dict[str, Dict[str, Any]] = {}

    def _path(self, config_name: str) -> Path:
        return self.config_dir / f"{config_name}.yaml"

    def load_config(self, config_name: str, refresh: bool = False) -> Dict[str, Any]:
        """
        Load ``<config_dir>/<config_name>.yaml``, cached after the first read.

        Raises:
            ConfigError: If the file is missing or invalid
        """
        if refresh or config_name not in self._cache:
            self._cache[config_name], _ = read_yaml_mapping(self._path(config_name))
        return self._cache[config_name]

    def get_config_value(self, config_name: str, key_path: str, default: Any = None) -> Any:
        """
        Look up a dotted key such as ``sweep.grid.m_values``.

        A missing file or key gives ``default``; a file that exists but does
        not parse still raises.
        """
        if not self._path(config_name).exists():
            return default
        node: Any = self.load_config(config_name)
        for key in key_path.split("."):
            if not isinstance(node, dict) or key not in node:
                return default
            node = node[key]
        return node


_config_loader: Optional[ConfigLoader] = None


def get_config_loader(config_dir: Optional[Union[str, Path]] = None) -> ConfigLoader:
    """Shared loader; passing ``config_dir`` replaces it."""
    global _config_loader
    if _config_loader is None or config_dir is not None:
        _config_loader = ConfigLoader(config_dir)
    return _config_loader
