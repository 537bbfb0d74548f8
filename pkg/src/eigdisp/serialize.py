"""Byte-stable JSON and CSV emission.

Keys are sorted and floats carry 17 significant digits. Exact rationals
become ``"p/q"`` strings with a parallel ``<key>_float`` field. Infinite
values become the string ``"inf"``.
"""

import csv
import enum
import io
import json
import math
from fractions import Fraction

import numpy as np

__all__ = ["normalize", "dumps_json", "dumps_csv", "format_float", "parse_value"]


def format_float(x: float):
    """Finite floats pass through; non-finite ones become strings."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return x


def _fraction_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def normalize(obj):
    """Convert ``obj`` to plain JSON types following the conventions above."""
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            key = str(key)
            if isinstance(value, Fraction):
                out[key] = _fraction_text(value)
                out[f"{key}_float"] = format_float(float(value))
            else:
                out[key] = normalize(value)
        return out
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    if isinstance(obj, Fraction):
        return _fraction_text(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, np.ndarray):
        return normalize(obj.tolist())
    return obj


def _emit(obj) -> str:
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {_emit(v)}" for k, v in items) + "}"
    if isinstance(obj, list):
        return "[" + ", ".join(_emit(v) for v in obj) + "]"
    if isinstance(obj, float):
        text = format(obj, ".17g")
        return text if any(c in text for c in ".en") else text + ".0"
    return json.dumps(obj)


def dumps_json(obj) -> str:
    return _emit(normalize(obj))


def _flatten(record: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = ";".join(str(v) for v in value)
        elif value is None:
            flat[name] = ""
        elif isinstance(value, float):
            flat[name] = format(value, ".17g")
        else:
            flat[name] = value
    return flat


def dumps_csv(records: list) -> str:
    rows = [_flatten(normalize(r)) for r in records]
    columns = sorted({c for row in rows for c in row})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def parse_value(text: str):
    """Inverse of the CSV cell encoding for scalars (used to cross-check JSON)."""
    if text == "":
        return None
    if text in ("True", "False"):
        return text == "True"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        if text in ("inf", "-inf", "nan"):
            return text
        return float(text)
    except ValueError:
        return text
