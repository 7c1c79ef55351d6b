"""Command-line interface of isotype."""

from isotype.cli.commands import catalog_report, run_task, run_tasks
from isotype.cli.main import main
from isotype.cli.resolve import SpecContext, build_construction

__all__ = [
    "SpecContext",
    "build_construction",
    "catalog_report",
    "main",
    "run_task",
    "run_tasks",
]
