"""JSON and CSV emitters for verification reports and tables."""

from __future__ import annotations

import csv
import io
import json
import math
from datetime import datetime, timezone
from typing import Iterable, Sequence

from .records import RECORD_FIELDS, VerificationRecord

SCHEMA_VERSION = 1


def _json_number(x):
    # JSON has no inf/nan; an infinite rel_err (closed value 0) becomes null
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def build_report(records: Iterable[VerificationRecord], metadata: dict) -> dict:
    recs = sorted(records, key=lambda r: r.sort_key)
    passed = sum(r.passed for r in recs)
    return {
        "schema": SCHEMA_VERSION,
        "metadata": metadata,
        "records": [{k: _json_number(v) for k, v in r.as_dict().items()} for r in recs],
        "summary": {"total": len(recs), "passed": passed, "failed": len(recs) - passed},
    }


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return ".".join(map(str, v))
    return str(v)


def to_csv(rows: Sequence[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(fields)
    for row in rows:
        w.writerow([_cell(row.get(f)) for f in fields])
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def report_csv(report: dict) -> str:
    return to_csv(report["records"], RECORD_FIELDS)
