"""Writing emitted reports and comparing them with golden files."""

import logging
from pathlib import Path

from isotype.storage.base import BaseStorage

logger = logging.getLogger(__name__)


class ReportStorage(BaseStorage):
    """Storage for emitted report text."""

    def save(self, path: Path | str, content: str) -> Path:
        """Write report text and return the file path."""
        file_path = self.resolve(path)
        self._save_text(file_path, content)
        logger.info("wrote report to %s", file_path)
        return file_path

    def matches_golden(self, path: Path | str, content: str) -> bool:
        """
        Compare report text byte for byte with a golden file.

        A missing golden file is recorded from ``content`` and counts as a match.

        Args:
            path: Golden file path
            content: Emitted report text

        Returns:
            True iff the golden file holds exactly ``content``
        """
        file_path = self.resolve(path)
        golden = self._load_text(file_path)
        if golden is None:
            self._save_text(file_path, content)
            logger.warning("golden file %s did not exist; recorded current output", file_path)
            return True
        same = golden.encode("utf-8") == content.encode("utf-8")
        if not same:
            logger.warning("output differs from golden file %s", file_path)
        return same
