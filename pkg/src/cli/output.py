"""Number formatting and CSV/JSON writers for command output."""

import csv
import json
import math
from typing import Any, Iterable, Sequence, TextIO

from ..core.config import AppConfig

_NUMBER_FORMAT = f".{AppConfig.SIGNIFICANT_DIGITS}g"


def format_number(value: float) -> str:
    """Round-trip-safe text for a float (17 significant digits)."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, _NUMBER_FORMAT)


def json_safe(value: Any) -> Any:
    """Replace non-finite floats by None, recursively, so json.dumps stays strict."""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    if hasattr(value, "item") and callable(value.item):
        # numpy scalars
        return json_safe(value.item())
    return value


def write_json(data: Any, stream: TextIO) -> None:
    json.dump(json_safe(data), stream, indent=2, allow_nan=False)
    stream.write("\n")


def write_csv(header: Sequence[str], rows: Iterable[Sequence[float]], stream: TextIO) -> None:
    """Write a header row then one formatted row per entry of ``rows``."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(value) for value in row])


def write_pairs(items: Iterable[Sequence[Any]], stream: TextIO) -> None:
    """Write ``key=value`` lines; floats get 17 significant digits."""
    for key, value in items:
        text = format_number(value) if isinstance(value, float) else str(value)
        stream.write(f"{key}={text}\n")
