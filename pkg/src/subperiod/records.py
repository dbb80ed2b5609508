"""CSV / JSON serialization of period records.

Every record starts with ``set;preperiod;period;block;horizon``; commands that
carry more (status, predictions) append columns after those five.
"""
from __future__ import annotations

import csv
import io
import json

BASE_FIELDS = ("set", "preperiod", "period", "block", "horizon")
INT_FIELDS = {"preperiod", "period", "horizon", "predicted", "published_period", "parameter"}


def field_order(records: list[dict]) -> list[str]:
    fields = list(BASE_FIELDS)
    for rec in records:
        for key in rec:
            if key not in fields:
                fields.append(key)
    return fields


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ",".join(map(str, value))
    return str(value)


def to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=";", lineterminator="\n")
    fields = field_order(records)
    writer.writerow(fields)
    for rec in records:
        writer.writerow([_cell(rec.get(f)) for f in fields])
    return buf.getvalue()


def to_json(records: list[dict]) -> str:
    if not records:
        return "[]\n"
    return "[\n" + ",\n".join(json.dumps(rec) for rec in records) + "\n]\n"


def read_csv(text: str) -> list[dict]:
    """Inverse of :func:`to_csv`, restoring ints, set lists and ``None``."""
    rows = []
    for raw in csv.DictReader(io.StringIO(text), delimiter=";"):
        rec = {}
        for key, value in raw.items():
            if value == "":
                rec[key] = None
            elif key == "set":
                rec[key] = [int(x) for x in value.split(",")]
            elif key in INT_FIELDS:
                rec[key] = int(value)
            else:
                rec[key] = value
        rows.append(rec)
    return rows
