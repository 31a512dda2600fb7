"""
입출력 Adapters
"""

from .csv_dataset_adapter import DatasetFile, load_csv, write_dataset_csv
from .manifest import MANIFEST_FILE, RunManifest
from .report_writer import write_frame, write_json

__all__ = [
    "DatasetFile",
    "load_csv",
    "write_dataset_csv",
    "MANIFEST_FILE",
    "RunManifest",
    "write_frame",
    "write_json",
]
