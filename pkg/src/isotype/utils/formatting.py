"""Rendering of verification reports as JSON or aligned text tables."""

import io
import json
from collections.abc import Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from isotype.models.report import VerificationReport

TEXT_WIDTH = 100


def format_witness(witness: Sequence[str] | None) -> str:
    """Render a witness tuple, e.g. ``(e, f, h)``."""
    if not witness:
        return ""
    return "(" + ", ".join(witness) + ")"


def reports_to_json(reports: Sequence[VerificationReport], timings: bool = False) -> str:
    """
    One JSON object per report in an array, keys in model field order.

    ``millis`` is dropped unless ``timings`` is set, so the output is byte-stable.
    """
    exclude = None if timings else {"millis"}
    payload = [r.model_dump(mode="json", exclude=exclude) for r in reports]
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _summary_table(reports: Sequence[VerificationReport], timings: bool) -> Table:
    table = Table(title="Summary", show_lines=False)
    table.add_column("task")
    table.add_column("status")
    table.add_column("checked", justify="right")
    table.add_column("violations", justify="right")
    table.add_column("witness")
    if timings:
        table.add_column("ms", justify="right")
    for r in reports:
        row = [r.task, str(r.status), str(r.checked), str(r.violations), format_witness(r.witness)]
        if timings:
            row.append(str(r.millis) if r.millis is not None else "")
        table.add_row(*(escape(cell) for cell in row))
    return table


def _report_table(report: VerificationReport) -> Table:
    table = Table(title=escape(f"{report.task} [{report.status}]"), title_justify="left")
    table.add_column("check")
    table.add_column("result")
    table.add_column("checked", justify="right")
    table.add_column("violations", justify="right")
    table.add_column("witness / note")
    for c in report.checks:
        result = "pass" if c.passed else "FAIL"
        if c.informational:
            result += " (info)"
        detail = format_witness(c.witness)
        if c.note:
            detail = f"{detail} {c.note}".strip()
        cells = (c.name, result, str(c.checked), str(c.violations), detail)
        table.add_row(*(escape(cell) for cell in cells))
    return table


def reports_to_text(reports: Sequence[VerificationReport], timings: bool = False) -> str:
    """Aligned tables: a summary, then dims, checks and notes for each report."""
    buffer = io.StringIO()
    console = Console(file=buffer, width=TEXT_WIDTH, color_system=None, highlight=False)
    if not reports:
        console.print("no tasks")
        return buffer.getvalue()
    console.print(_summary_table(reports, timings))
    for r in reports:
        console.print()
        if r.dims:
            dims = ", ".join(f"{k}={v}" for k, v in r.dims.items())
            console.print(f"{r.task} dims: {dims}", markup=False)
        if r.error:
            console.print(f"{r.task} error: {r.error}", markup=False)
        if r.checks:
            console.print(_report_table(r))
        for note in r.notes:
            console.print(f"note: {note}", markup=False)
    return buffer.getvalue()


def render_reports(
    reports: Sequence[VerificationReport], fmt: str = "json", timings: bool = False
) -> str:
    """Dispatch on the output format, ``json`` or ``text``."""
    if fmt == "text":
        return reports_to_text(reports, timings)
    return reports_to_json(reports, timings)
