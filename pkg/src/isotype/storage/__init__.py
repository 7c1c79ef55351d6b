"""Storage for spec files and emitted reports."""

from isotype.storage.base import BaseStorage, get_data_dir
from isotype.storage.reports import ReportStorage
from isotype.storage.specs import SpecStorage, parse_spec, parse_spec_text, value_offsets

__all__ = [
    "BaseStorage",
    "get_data_dir",
    "ReportStorage",
    "SpecStorage",
    "parse_spec",
    "parse_spec_text",
    "value_offsets",
]
