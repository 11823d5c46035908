"""Deterministic CSV and JSON rendering of report rows.

Rationals are never floated: in CSV count reports they are split into
numerator and denominator columns, everywhere else they render as
``"num/den"``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Sequence

from .theorems import CountReport

COUNT_COLUMNS = ("exact", "main_num", "main_den", "error_num", "error_den",
                 "bound", "ratio_num", "ratio_den")


def render_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _plain(value):
    if isinstance(value, Fraction):
        return render_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if is_dataclass(value):
        return {f.name: _plain(getattr(value, f.name)) for f in fields(value)}
    return str(value)


def count_header(size_name: str = "N") -> list[str]:
    return ["curve", "q", "S", "m", "w", size_name, *COUNT_COLUMNS]


def _num_den(x):
    if x is None:
        return "", ""
    x = Fraction(x)
    return x.numerator, x.denominator


def count_report_csv_row(r: CountReport) -> list:
    main_n, main_d = _num_den(r.main_term)
    err_n, err_d = _num_den(r.error)
    rat_n, rat_d = _num_den(r.ratio)
    exact = "" if r.exact_count is None else r.exact_count
    return [r.curve, r.q, r.S, r.m, r.w, r.size, exact, main_n, main_d,
            err_n, err_d, r.bound, rat_n, rat_d]


def count_report_json(r: CountReport) -> dict:
    return {
        "kind": r.kind,
        "params": r.params,
        "exact_count": r.exact_count,
        "main_term": render_rational(r.main_term),
        "error": None if r.error is None else render_rational(r.error),
        "error_bound_class": r.error_bound_class,
        "bound": r.bound,
        "ratio": None if r.ratio is None else render_rational(r.ratio),
        "density": None if r.density is None else render_rational(r.density),
        "density_limit": (None if r.density_limit is None
                          else render_rational(r.density_limit)),
        "constant_ratio": (None if r.constant_ratio is None
                           else render_rational(r.constant_ratio)),
        "notes": list(r.notes),
    }


def _csv_bytes(header, rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().encode()


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode()


def emit_report(rows: Sequence[CountReport], fmt: str = "csv",
                size_name: str | None = None) -> bytes:
    """Count reports as CSV (documented column order) or a JSON array."""
    if fmt == "json":
        return _json_bytes([count_report_json(r) for r in rows])
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    name = size_name or (rows[0].size_name if rows else "N")
    return _csv_bytes(count_header(name), [count_report_csv_row(r) for r in rows])


def emit_table(columns: Sequence[str], rows: Sequence[dict], fmt: str = "csv") -> bytes:
    """Generic table of dict rows; rationals become ``"num/den"`` strings."""
    plain = [{c: _plain(row.get(c)) for c in columns} for row in rows]
    if fmt == "json":
        return _json_bytes(plain)
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    out = []
    for row in plain:
        out.append(["" if row[c] is None else
                    json.dumps(row[c]) if isinstance(row[c], list) else
                    str(row[c]).lower() if isinstance(row[c], bool) else row[c]
                    for c in columns])
    return _csv_bytes(columns, out)
