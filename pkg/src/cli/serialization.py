"""
Deterministic JSON documents for CLI output.

Keys keep insertion order, numpy scalars and arrays become plain Python
values and non-finite floats are written as null. Floats use Python's
shortest round-trip repr, so equal inputs always give identical bytes.
"""

import json
import math
from typing import Any

import numpy as np

SCHEMA_VERSION = 1


def to_plain(value: Any) -> Any:
    """Recursively convert a report structure into JSON-ready Python values."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def document(command: str, body: dict) -> dict:
    """Wrap a report body with the schema header."""
    return {"schema": SCHEMA_VERSION, "command": command, **body}


def dumps(doc: dict) -> str:
    return json.dumps(to_plain(doc), indent=2, allow_nan=False, ensure_ascii=False) + "\n"
