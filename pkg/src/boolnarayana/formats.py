"""Rendering of tables, polynomials and root reports as text, CSV or JSON.

Big integers are always written as decimal strings in JSON so that no
consumer truncates them to doubles.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Optional, Sequence

from .poly import IntPolynomial, RatInterval

FORMATS = ("csv", "json", "text")


def rows_to_json(rows: Iterable[tuple[int, Sequence[int]]], **extra) -> str:
    doc = dict(extra)
    doc["rows"] = [{"n": n, "values": [str(v) for v in vals]} for n, vals in rows]
    return json.dumps(doc, indent=2) + "\n"


def rows_to_csv(rows: Iterable[tuple[int, Sequence[int]]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "value"])
    for n, vals in rows:
        for k, v in enumerate(vals, start=1):
            w.writerow([n, k, str(v)])
    return buf.getvalue()


def rows_to_text(rows: Iterable[tuple[int, Sequence[int]]]) -> str:
    return "".join(", ".join(str(v) for v in vals) + "\n" for _, vals in rows)


def render_rows(rows: Iterable[tuple[int, Sequence[int]]], fmt: str, **extra) -> str:
    rows = list(rows)
    if fmt == "json":
        return rows_to_json(rows, **extra)
    if fmt == "csv":
        return rows_to_csv(rows)
    if fmt == "text":
        return rows_to_text(rows)
    raise ValueError(f"unknown format {fmt!r}")


def rows_from_json(text: str) -> list[tuple[int, list[int]]]:
    doc = json.loads(text)
    return [(r["n"], [int(v) for v in r["values"]]) for r in doc["rows"]]


def rows_from_csv(text: str) -> list[tuple[int, list[int]]]:
    out: dict[int, list[int]] = {}
    for rec in csv.DictReader(io.StringIO(text)):
        out.setdefault(int(rec["n"]), []).append(int(rec["value"]))
    return sorted(out.items())


def poly_to_json(p: IntPolynomial, degree: Optional[int] = None) -> str:
    coeffs = list(p.coeffs)
    if degree is not None:
        coeffs += [0] * (degree + 1 - len(coeffs))
    return json.dumps([str(c) for c in coeffs]) + "\n"


def poly_from_json(text: str) -> IntPolynomial:
    return IntPolynomial(int(c) for c in json.loads(text))


def intervals_to_json(ivs: Sequence[RatInterval]) -> list[dict]:
    return [iv.to_json() for iv in ivs]
