"""Utils package for helper functions and utilities."""

from .config_loader import (
    ConfigLoader,
    default_config_dir,
    get_config_loader,
    read_number_list,
    read_yaml_mapping,
)
from .logger import setup_logger, get_logger
from .validators import validate_checkpoints, validate_mean_vector
from .exporters import ResultExporter, atomic_write_text, FLOAT_FORMAT

__all__ = [
    "ConfigLoader",
    "get_config_loader",
    "default_config_dir",
    "read_number_list",
    "read_yaml_mapping",
    "setup_logger",
    "get_logger",
    "validate_checkpoints",
    "validate_mean_vector",
    "ResultExporter",
    "atomic_write_text",
    "FLOAT_FORMAT",
]
