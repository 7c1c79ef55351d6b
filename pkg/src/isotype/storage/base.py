"""Base storage class rooted at a working directory."""

import json
from pathlib import Path
from typing import Any


def get_data_dir() -> Path:
    """
    Get the directory that relative spec and report paths are resolved against.

    Returns:
        The current working directory
    """
    return Path.cwd()


class BaseStorage:
    """Base class for file-backed storage."""

    def __init__(self, root: Path | str | None = None):
        """
        Initialize storage rooted at a directory.

        Args:
            root: Base directory; the current working directory when omitted
        """
        self.data_dir = Path(root) if root is not None else get_data_dir()

    def resolve(self, path: Path | str) -> Path:
        """Absolute paths are kept, relative ones are taken under ``data_dir``."""
        path = Path(path)
        return path if path.is_absolute() else self.data_dir / path

    def _load_json(self, file_path: Path) -> dict[str, Any] | list[Any] | None:
        """Load JSON from a file, returning None if it doesn't exist or is malformed."""
        text = self._load_text(file_path)
        if text is None:
            return None
        try:
            return json.loads(text)
        except json.JSONDecodeError:
            return None

    def _save_json(self, file_path: Path, data: dict[str, Any] | list[Any]) -> None:
        """Save data as JSON to a file, keys in insertion order."""
        self._save_text(file_path, json.dumps(data, indent=2, ensure_ascii=False) + "\n")

    def _load_text(self, file_path: Path) -> str | None:
        """Load UTF-8 text from a file, returning None if it doesn't exist."""
        if not file_path.exists():
            return None
        try:
            return file_path.read_text(encoding="utf-8")
        except OSError:
            return None

    def _save_text(self, file_path: Path, content: str) -> None:
        """Save UTF-8 text to a file, creating parent directories."""
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(content, encoding="utf-8")
