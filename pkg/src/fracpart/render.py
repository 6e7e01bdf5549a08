"""CSV, Markdown and JSON renderings, plus parsers for the JSON forms.

Counts are written as decimal strings in JSON so consumers with 64-bit
integers never truncate them.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

import mpmath

from fracpart.conjectures import ConjectureReport
from fracpart.even import EvenSolution, SeriesWitness
from fracpart.odd import CountTable, PartitionWitness
from fracpart.omega import HPComplex, OmegaResult

FORMATS = ("csv", "md", "json")


def markdown_grid(header: Sequence[str], rows: Iterable[Sequence[str]], align_right: bool = True) -> str:
    rule = "---:" if align_right else "---"
    lines = ["| " + " | ".join(header) + " |", "|" + f"{rule}|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def csv_grid(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def table_markdown(table: CountTable) -> str:
    """Grid with j down the left, k across, nonzero entries in bold."""
    header = ["j \\ k"] + [str(k) for k in table.ks]
    rows = [
        [str(j)] + [f"**{v}**" if v else "0" for v in table.row(j)]
        for j in table.js
    ]
    return markdown_grid(header, rows)


def table_csv(table: CountTable) -> str:
    return csv_grid(["j"] + [str(k) for k in table.ks], ([j, *table.row(j)] for j in table.js))


def table_to_dict(table: CountTable) -> dict:
    return {
        "h": table.h,
        "jRange": list(table.j_range),
        "kRange": list(table.k_range),
        "counts": [[str(v) for v in table.row(j)] for j in table.js],
    }


def table_from_dict(d: dict) -> CountTable:
    return CountTable(
        tuple(d["jRange"]),
        tuple(d["kRange"]),
        d["h"],
        tuple(tuple(int(v) for v in row) for row in d["counts"]),
    )


def render_table(table: CountTable, fmt: str) -> str:
    if fmt == "md":
        return table_markdown(table)
    if fmt == "csv":
        return table_csv(table)
    if fmt == "json":
        return json.dumps(table_to_dict(table)) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def witness_from_dict(d: dict) -> PartitionWitness:
    w = PartitionWitness(tuple(d["numerators"]), d["denominator"])
    if "k" in d and w.k != d["k"]:
        raise ValueError(f"witness sums to {w.k}, record says {d['k']}")
    return w


def series_witness_from_dict(d: dict) -> SeriesWitness:
    return SeriesWitness(tuple(d["numerators"]), d["denominator"])


def solution_from_dict(d: dict) -> EvenSolution:
    return EvenSolution(d["t"], d["x"], d["y"])


def omega_from_dict(d: dict) -> OmegaResult:
    prec = int(d["precisionBits"])
    with mpmath.workprec(prec):
        value = HPComplex(mpmath.mpf(d["re"]), mpmath.mpf(d["im"]), prec)
        return OmegaResult(value, mpmath.mpf(d["errBound"]), prec)


def report_from_dict(d: dict) -> ConjectureReport:
    r = ConjectureReport(d["name"], tuple(d["jRange"]))
    r.failures = [tuple(f) for f in d["failures"]]
    r.details = {int(k): v for k, v in d["details"].items()}
    r.notes = list(d["notes"])
    if r.verdict != d["verdict"]:
        raise ValueError("verdict does not match failures")
    return r
