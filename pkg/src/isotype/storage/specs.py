"""Reading and writing `.alg.json` spec files with located diagnostics."""

import json
import logging
import re
from pathlib import Path

from pydantic import ValidationError

from isotype.errors import SpecError
from isotype.models.spec import AlgSpec, SpecReferenceError, dump_spec
from isotype.storage.base import BaseStorage

logger = logging.getLogger(__name__)

JsonPath = tuple[str | int, ...]

_WS = re.compile(r"[ \t\n\r]*")


def value_offsets(text: str) -> dict[JsonPath, int]:
    """
    Character offset of every value in a well-formed JSON document, keyed by its path.

    Object members are keyed by name and array items by position.
    """
    decoder = json.JSONDecoder()
    offsets: dict[JsonPath, int] = {}

    def skip(i: int) -> int:
        match = _WS.match(text, i)
        assert match is not None
        return match.end()

    def value(i: int, path: JsonPath) -> int:
        i = skip(i)
        offsets[path] = i
        if text[i] == "{":
            i = skip(i + 1)
            if text[i] == "}":
                return i + 1
            while True:
                key, i = json.decoder.scanstring(text, skip(i) + 1)
                i = skip(i) + 1  # ':'
                i = skip(value(i, path + (key,)))
                if text[i] == "}":
                    return i + 1
                i += 1  # ','
        if text[i] == "[":
            i = skip(i + 1)
            if text[i] == "]":
                return i + 1
            n = 0
            while True:
                i = skip(value(i, path + (n,)))
                n += 1
                if text[i] == "]":
                    return i + 1
                i += 1
        _, end = decoder.raw_decode(text, i)
        return end

    value(0, ())
    return offsets


def line_column(text: str, offset: int) -> tuple[int, int]:
    """1-based line and column of a character offset."""
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _locate(text: str, path: JsonPath) -> tuple[int, int] | None:
    offsets = value_offsets(text)
    for end in range(len(path), -1, -1):
        offset = offsets.get(path[:end])
        if offset is not None:
            return line_column(text, offset)
    return None


def _render(path: JsonPath) -> str:
    return "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in path).lstrip(".")


def parse_spec_text(text: str, source: Path | str = "<string>") -> AlgSpec:
    """
    Parse and validate spec text.

    Raises:
        SpecError: malformed JSON, an invalid value or an unresolved reference, located by line
            and column when possible
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc.msg}", source, exc.lineno, exc.colno) from exc
    try:
        return AlgSpec.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        path: JsonPath = tuple(error["loc"])
        cause = (error.get("ctx") or {}).get("error")
        if isinstance(cause, SpecReferenceError):
            path = cause.path
            message = str(cause)
        elif isinstance(cause, ValueError):
            message = str(cause)
        else:
            message = error["msg"]
        where = _locate(text, path)
        if path:
            message = f"{_render(path)}: {message}"
        line, column = where if where is not None else (None, None)
        raise SpecError(message, source, line, column) from exc


class SpecStorage(BaseStorage):
    """Storage for algebra-spec files."""

    def load(self, path: Path | str) -> AlgSpec:
        """
        Load a spec file.

        Args:
            path: File path, relative to the storage root unless absolute

        Returns:
            The validated spec

        Raises:
            SpecError: unreadable file or invalid content
        """
        file_path = self.resolve(path)
        try:
            text = self._load_text(file_path)
        except UnicodeDecodeError as exc:
            raise SpecError("spec file is not UTF-8", file_path) from exc
        if text is None:
            raise SpecError("cannot read spec file", file_path)
        spec = parse_spec_text(text, file_path)
        logger.info(
            "loaded spec %s: %d tasks, field %s", file_path.name, len(spec.tasks), spec.field
        )
        return spec

    def save(self, spec: AlgSpec, path: Path | str) -> Path:
        """Write a spec in canonical form and return the file path."""
        file_path = self.resolve(path)
        self._save_json(file_path, dump_spec(spec))
        return file_path


def parse_spec(path: Path | str) -> AlgSpec:
    """Load a spec file relative to the working directory."""
    return SpecStorage().load(path)
