"""Dataset and report files.

A dataset is JSON with a single numeric mode::

    {"mode": "exact", "intervals": [{"a": "1/2", "b": "0", "c": "3", "d": "-2"}, ...]}

Exact values are strings ("p/q" or an integer string) because JSON numbers
cannot hold rationals losslessly; float datasets use JSON numbers.  Reports
mirror the in-memory structures, serialize scalars the same way, and
round-trip byte-identically.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .conics import Conic, conic_classify
from .correspondence import PlanarRotation
from .detect import (
    DegenerateFit,
    EndpointLoci,
    RegulusEndpointReport,
    StructureReport,
    line_member,
)
from .primitives import Interval, PlanarLine
from .scalars import EXACT, FLOAT, Scalar, format_scalar, parse_scalar


def dataset_to_dict(intervals: Sequence[Interval], mode: str) -> dict:
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown mode {mode!r}")
    records = []
    for itv in intervals:
        a, b, c, d = itv.as_tuple()
        if mode == FLOAT:
            a, b, c, d = float(a), float(b), float(c), float(d)
        records.append(
            {"a": format_scalar(a), "b": format_scalar(b),
             "c": format_scalar(c), "d": format_scalar(d)}
        )
    return {"mode": mode, "intervals": records}


def dataset_from_dict(data: dict) -> tuple[list[Interval], str]:
    if not isinstance(data, dict) or "mode" not in data or "intervals" not in data:
        raise ValueError("dataset must be an object with 'mode' and 'intervals'")
    mode = data["mode"]
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown dataset mode {mode!r}")
    intervals = []
    for rec in data["intervals"]:
        try:
            values = [parse_scalar(rec[k], mode) for k in ("a", "b", "c", "d")]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed interval record {rec!r}") from exc
        intervals.append(Interval(*values))
    return intervals, mode


def save_dataset(path: str, intervals: Sequence[Interval], mode: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dataset_to_dict(intervals, mode), fh, indent=1)
        fh.write("\n")


def load_dataset(path: str) -> tuple[list[Interval], str]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {path}") from exc
    return dataset_from_dict(data)


# ---------------------------------------------------------------------------
# reports

def _scalars(values) -> list:
    return [format_scalar(v) for v in values]


def _member_records(indices: Sequence[int], n: int) -> list[dict]:
    out = []
    for k in indices:
        idx, rev = line_member(k, n)
        out.append({"interval": idx, "reversed": rev})
    return out


def _locus_record(locus) -> Optional[dict]:
    if locus is None:
        return None
    if isinstance(locus, Conic):
        return {
            "type": "conic",
            "coefficients": _scalars(locus.coefficients),
            "class": conic_classify(locus),
        }
    if isinstance(locus, PlanarLine):
        return {"type": "line", "coefficients": _scalars((locus.a, locus.b, locus.c))}
    if isinstance(locus, DegenerateFit):
        return {"type": "degenerate", "nullspace_dimension": locus.nullspace_dimension}
    raise TypeError(f"not a locus: {locus!r}")


def _loci_record(loci: EndpointLoci) -> dict:
    return {
        "subcase": loci.subcase,
        "initial": _locus_record(loci.initial),
        "terminal": _locus_record(loci.terminal),
        "mixed": _locus_record(loci.mixed),
    }


def report_to_dict(report: StructureReport, provenance: dict) -> dict:
    n = report.n
    concurrencies = [
        {
            "point": _scalars(w.point),
            "members": _member_records(w.members, n),
            "pullback_lines": [
                _scalars((pl.a, pl.b, pl.c)) for pl in w.pullback
            ],
        }
        for w in report.concurrencies
    ]
    coplanarities = []
    for w in report.coplanarities:
        pencil = None
        if w.pencil is not None:
            p = w.pencil
            pencil = {"kind": p.kind}
            if p.kind == "point":
                pencil["center"] = _scalars(p.center)
                pencil["ratio"] = _scalars(p.ratio)
                pencil["center_position"] = p.center_position
            else:
                pencil["translation"] = _scalars(p.translation)
        coplanarities.append(
            {
                "plane": _scalars(w.plane.coefficients()),
                "members": _member_records(w.members, n),
                "pencil": pencil,
            }
        )
    reguli = []
    for pos, w in enumerate(report.reguli):
        loci = None
        if pos < len(report.endpoint_conics):
            rec = report.endpoint_conics[pos]
            loci = {"ruling1": _loci_record(rec.ruling1), "ruling2": _loci_record(rec.ruling2)}
        reguli.append(
            {
                "quadric": _scalars(w.quadric.coefficients),
                "class": w.quadric_class,
                "ruling1": _member_records(w.ruling1, n),
                "ruling2": _member_records(w.ruling2, n),
                "endpoint_loci": loci,
            }
        )
    counts = report.counts
    rotation = None
    if report.rotation is not None:
        rotation = {
            "cosine": format_scalar(report.rotation.cosine),
            "sine": format_scalar(report.rotation.sine),
        }
    return {
        "counts": {
            "n": counts.n,
            "left_only": counts.left_only,
            "right_only": counts.right_only,
            "both": counts.both,
            "total_with_multiplicity": counts.total_with_multiplicity,
            "threshold": counts.threshold,
        },
        "relation": report.relation,
        "rho": None if report.rho is None else format_scalar(report.rho),
        "rotation": rotation,
        "structures": {
            "concurrencies": concurrencies,
            "coplanarities": coplanarities,
            "reguli": reguli,
        },
        "provenance": provenance,
    }


def save_report(path: str, report_dict: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report_dict, fh, indent=1)
        fh.write("\n")


def load_report(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {path}") from exc
    if not isinstance(data, dict) or "structures" not in data:
        raise ValueError("not a report file")
    return data


def validate_report(report_dict: dict, n_intervals: int) -> None:
    """Check witness indices are in range (sanity for hand-edited files)."""
    structures = report_dict.get("structures", {})
    def check_members(records):
        for rec in records:
            idx = rec.get("interval", -1)
            if not 0 <= idx < n_intervals:
                raise ValueError(f"witness interval index {idx} out of range")
    for w in structures.get("concurrencies", []):
        check_members(w.get("members", []))
    for w in structures.get("coplanarities", []):
        check_members(w.get("members", []))
    for w in structures.get("reguli", []):
        check_members(w.get("ruling1", []))
        check_members(w.get("ruling2", []))
