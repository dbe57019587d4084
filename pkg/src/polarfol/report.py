"""Versioned JSON reports.

Every report is a plain dictionary of JSON-native values carrying a
``schema`` key. Exact numbers are written as strings so that nothing is
lost; :func:`load` returns exactly the dictionary that :func:`emit` wrote.
"""
from __future__ import annotations

import json

from gmpy2 import mpq

from .exactalg import AlgElem, Poly, UniSeries

__all__ = ["SCHEMA", "SCHEMA_VERSION", "jsonable", "emit", "load"]

SCHEMA = "polarfol.report"
SCHEMA_VERSION = 1


def jsonable(value):
    """Convert exact values and records to JSON-native data."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, (mpq, AlgElem)):
        if isinstance(value, mpq) and value.denominator == 1:
            return str(value.numerator)
        return value._fmt() if isinstance(value, AlgElem) else str(value)
    if isinstance(value, Poly):
        return value.fmt()
    if isinstance(value, UniSeries):
        return value.fmt()
    if hasattr(value, "to_json"):
        return jsonable(value.to_json())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def emit(report: dict) -> str:
    """Serialize with sorted keys; the output is byte-stable."""
    body = dict(jsonable(report))
    body.setdefault("schema", SCHEMA)
    body.setdefault("schema_version", SCHEMA_VERSION)
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def load(text: str) -> dict:
    """Parse a report and check its schema tag."""
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise ValueError("not a polarfol report")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {data.get('schema_version')}")
    return data
