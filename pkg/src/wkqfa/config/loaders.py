"""JSON file loading and validation helpers for machine and DFA documents."""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from ..errors import MachineFileError, MachineValidationError
from .models import DfaFile, MachineFile


def read_json(path: Path) -> Any:
    """Read and decode one JSON document from disk."""

    try:
        raw_text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise MachineFileError(f"File not found: {path}") from exc
    except OSError as exc:
        raise MachineFileError(f"Unable to read file: {path}") from exc
    return decode_json(raw_text, source=str(path))


def decode_json(raw_text: str, *, source: str = "<string>") -> Any:
    """Decode JSON text, mapping syntax errors to ``MachineFileError``."""

    try:
        return json.loads(raw_text)
    except json.JSONDecodeError as exc:
        raise MachineFileError(f"Invalid JSON in {source}: {exc}") from exc


def parse_machine_document(
    document: str | Mapping[str, Any] | MachineFile, *, source: str = "<string>"
) -> MachineFile:
    """Validate a machine document given as JSON text, a mapping, or a model."""

    if isinstance(document, MachineFile):
        return document
    payload = decode_json(document, source=source) if isinstance(document, str) else document
    return _validate(MachineFile, payload, source=source, label="Machine")


def parse_dfa_document(
    document: str | Mapping[str, Any] | DfaFile, *, source: str = "<string>"
) -> DfaFile:
    """Validate a DFA document given as JSON text, a mapping, or a model."""

    if isinstance(document, DfaFile):
        return document
    payload = decode_json(document, source=source) if isinstance(document, str) else document
    return _validate(DfaFile, payload, source=source, label="DFA")


def read_machine_file(path: Path) -> MachineFile:
    """Load and validate a machine file from disk."""

    return parse_machine_document(read_json(path), source=str(path))


def read_dfa_file(path: Path) -> DfaFile:
    """Load and validate a DFA file from disk."""

    return parse_dfa_document(read_json(path), source=str(path))


def dump_document(payload: Mapping[str, Any]) -> str:
    """Serialize a document deterministically (sorted keys, trailing newline)."""

    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _validate[ModelT: BaseModel](
    model: type[ModelT], payload: Any, *, source: str, label: str
) -> ModelT:
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        errors = [_format_validation_error(item) for item in exc.errors()]
        message = f"{label} validation failed."
        if errors:
            message = f"{message} {errors[0]}"
        raise MachineValidationError(message, errors=errors, path=source) from exc


def _format_validation_error(item: Mapping[str, object]) -> str:
    """Format one pydantic error into a short, readable message."""

    loc = item.get("loc") or ()
    parts: list[str] = []
    for value in loc if isinstance(loc, tuple) else (loc,):
        if isinstance(value, int):
            if not parts:
                parts.append(f"[{value}]")
            else:
                parts[-1] = f"{parts[-1]}[{value}]"
        else:
            parts.append(str(value))
    field_path = ".".join(parts) if parts else "<root>"
    message = str(item.get("msg", "validation error"))
    return f"{field_path}: {message}"
