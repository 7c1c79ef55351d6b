"""Utility functions for rendering reports."""

from isotype.utils.formatting import (
    format_witness,
    render_reports,
    reports_to_json,
    reports_to_text,
)

__all__ = [
    "format_witness",
    "render_reports",
    "reports_to_json",
    "reports_to_text",
]
