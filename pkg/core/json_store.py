"""Shared document persistence helpers: atomic writes, JSON / YAML reads."""
from __future__ import annotations

import contextlib
import json
import os
from pathlib import Path
from typing import Any

import yaml

from core.errors import ValidationError

YAML_SUFFIXES = {".yaml", ".yml"}


def write_text_atomic(path: str | os.PathLike, text: str) -> None:
    """Write through a sibling temp file and os.replace, so readers never see a partial file."""
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    tmp_path = target.with_name(target.name + ".tmp")
    try:
        with open(tmp_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_path, target)
    except BaseException:
        with contextlib.suppress(OSError):
            tmp_path.unlink(missing_ok=True)
        raise


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def dump_document(path: str | os.PathLike, payload: Any) -> None:
    if Path(path).suffix.lower() in YAML_SUFFIXES:
        text = yaml.safe_dump(payload, allow_unicode=True, sort_keys=False)
    else:
        text = dumps_json(payload)
    write_text_atomic(path, text)


def load_document(path: str | os.PathLike) -> Any:
    """Parse a JSON or YAML document; OSError propagates, bad syntax becomes ValidationError."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except UnicodeDecodeError as exc:
        raise ValidationError(f"{path}: not valid UTF-8: {exc}") from exc
    try:
        if Path(path).suffix.lower() in YAML_SUFFIXES:
            return yaml.safe_load(text)
        return json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise ValidationError(f"{path}: cannot parse document: {exc}") from exc
