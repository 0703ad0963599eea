"""Classification reports and witness tables for a single element."""
from __future__ import annotations

import csv
import io
from typing import Iterable

import numpy as np

from . import disk, interval, sequence
from .core import (
    DEFAULT_CONFIG,
    CertificationFailed,
    Config,
    NormBound,
    NotRepresentable,
    Status,
    WitnessSequence,
    WitnessTerm,
    classify,
    norm,
    phi,
)

WITNESS_KINDS = ("zero-divisor", "tdz")
CSV_COLUMNS = ("index", "unit_norm_lo", "unit_norm_hi", "product_norm_lo", "product_norm_hi")

_BOUND = {
    "type": "object",
    "properties": {"lo": {"type": "number"}, "hi": {"type": "number"}},
    "required": ["lo", "hi"],
}
_VERDICT = {
    "type": "object",
    "properties": {
        "status": {"enum": ["Proved", "Refuted", "Unknown"]},
        "reason": {"type": "string"},
        "citations": {"type": "array", "items": {"type": "string"}},
        "certificate": {"type": "object"},
    },
    "required": ["status", "reason", "citations"],
}
REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "element_spec": {"type": "object"},
        "config": {"type": "object"},
        "classification": {
            "type": "object",
            "properties": {k: _VERDICT for k in ("regular", "zero_divisor", "topological_divisor", "singular")},
            "required": ["regular", "zero_divisor", "topological_divisor", "singular"],
        },
        "phi": {"oneOf": [_BOUND, {"type": "null"}]},
        "norm": {"oneOf": [_BOUND, {"type": "null"}]},
        "witnesses": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "kind": {"enum": list(WITNESS_KINDS)},
                    "index": {"type": "integer", "minimum": 1},
                    "product_norm_lo": {"type": "number"},
                    "product_norm_hi": {"type": "number"},
                },
                "required": ["kind", "index", "product_norm_lo", "product_norm_hi"],
            },
        },
        "citations": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["element_spec", "classification", "witnesses", "citations"],
}


def witness_verdict(cls, kind: str):
    return cls.zero_divisor if kind == "zero-divisor" else cls.topological_divisor


def _zero_divisor_sequence(x, config: Config) -> WitnessSequence:
    if isinstance(x, interval.GridFunction):
        g = interval.zero_divisor_witness(x)
        peak = float(np.abs(g.values).max())
        g = g * (1.0 / peak)
        unit = norm(g, config)
        prod = interval.product_sup_norm(x, g)
        desc = "normalized tent on the widest zero interval"
    elif isinstance(x, sequence.BoundedSequence):
        g = sequence.zero_divisor_witness(x)
        unit = norm(g, config)
        prod = norm(x * g, config)
        desc = "basis vector at the first vanishing coordinate"
    elif isinstance(x, disk.DiskElement):
        if not x.poly.is_zero:
            raise NotRepresentable("only the zero element is a zero divisor in the disk algebra")
        g = disk.ComplexPolynomial([1])
        unit, prod = NormBound.exact(1.0), NormBound.exact(0.0)
        desc = "constant 1"
    else:
        raise NotRepresentable(f"no zero-divisor witness for {type(x).__name__}")
    return WitnessSequence(desc, lambda n: WitnessTerm(n, g, unit, prod))


def witness_sequence(x, kind: str, config: Config = DEFAULT_CONFIG) -> WitnessSequence:
    if kind == "zero-divisor":
        return _zero_divisor_sequence(x, config)
    if kind != "tdz":
        raise ValueError(f"unknown witness kind {kind!r}")
    if isinstance(x, interval.GridFunction):
        return interval.bump_witness_sequence(x)
    if isinstance(x, sequence.BoundedSequence):
        return sequence.tdz_witness_sequence(x)
    if isinstance(x, disk.DiskElement):
        return disk.tdz_witness_sequence(x, config)
    raise NotRepresentable(f"no topological-divisor witness for {type(x).__name__}; sample it on a grid")


def witness_rows(w: WitnessSequence, indices: Iterable[int]) -> list:
    rows = []
    for t in w.terms(indices):
        u = t.unit_norm or NormBound(float("nan"), float("nan"))
        rows.append((t.index, u.lo, u.hi, t.product_norm.lo, t.product_norm.hi))
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([r[0]] + [repr(float(v)) for v in r[1:]])
    return buf.getvalue()


def build_report(spec: dict, x, config: Config = DEFAULT_CONFIG, witness_indices=range(1, 6)) -> dict:
    cls = classify(x, config)
    try:
        ph = phi(x, config).to_dict()
    except (CertificationFailed, NotRepresentable):
        ph = None
    try:
        nm = norm(x, config).to_dict()
    except CertificationFailed:
        nm = None
    witnesses = []
    for kind in WITNESS_KINDS:
        if witness_verdict(cls, kind).status is not Status.PROVED:
            continue
        try:
            w = witness_sequence(x, kind, config)
        except NotRepresentable:
            continue
        for r in witness_rows(w, witness_indices):
            witnesses.append({"kind": kind, "index": r[0], "product_norm_lo": r[3], "product_norm_hi": r[4]})
    citations = []
    for v in cls.verdicts().values():
        for c in v.citations:
            if c not in citations:
                citations.append(c)
    return {
        "element_spec": spec,
        "config": config.to_dict(),
        "classification": cls.to_dict(),
        "phi": ph,
        "norm": nm,
        "witnesses": witnesses,
        "citations": citations,
    }
