"""JSON element specs: parsing, validation and serialization."""
from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import numpy as np

from .core import BanachLabError
from .disk import BlaschkeProduct, ComplexPolynomial, DiskElement
from .interval import GridFunction, RealPolynomial
from .sequence import BoundedSequence, Tail

_NUM = {"type": "number"}
_NUMS = {"type": "array", "items": _NUM}
_CPLX = {
    "type": "object",
    "properties": {"re": _NUM, "im": _NUM},
    "required": ["re"],
    "additionalProperties": False,
}

C_SCHEMA = {
    "type": "object",
    "properties": {
        "algebra": {"const": "C"},
        "a": _NUM,
        "b": _NUM,
        "repr": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["grid", "poly"]},
                "re": _NUMS,
                "im": _NUMS,
                "nodes": _NUMS,
                "coeffs_re": _NUMS,
                "coeffs_im": _NUMS,
                "basis": {"enum": ["monomial", "bernstein"]},
            },
            "required": ["kind"],
            "additionalProperties": False,
        },
    },
    "required": ["algebra", "a", "b", "repr"],
    "additionalProperties": False,
}

LINF_SCHEMA = {
    "type": "object",
    "properties": {
        "algebra": {"const": "linf"},
        "prefix_re": _NUMS,
        "prefix_im": _NUMS,
        "tail": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["const", "recip", "zero", "affine"]},
                "re": _NUM,
                "im": _NUM,
                "scale_re": _NUM,
                "scale_im": _NUM,
            },
            "required": ["kind"],
            "additionalProperties": False,
        },
    },
    "required": ["algebra", "tail"],
    "additionalProperties": False,
}

DISK_SCHEMA = {
    "type": "object",
    "properties": {
        "algebra": {"const": "disk"},
        "poly": {
            "type": "object",
            "properties": {"re": _NUMS, "im": _NUMS},
            "required": ["re"],
            "additionalProperties": False,
        },
        "blaschke": {
            "type": "object",
            "properties": {"zeros": {"type": "array", "items": _CPLX}, "gamma": _CPLX},
            "required": ["zeros"],
            "additionalProperties": False,
        },
    },
    "required": ["algebra"],
    "additionalProperties": False,
}

SCHEMAS = {"C": C_SCHEMA, "linf": LINF_SCHEMA, "disk": DISK_SCHEMA}


class SpecError(BanachLabError, ValueError):
    """Invalid element spec; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


def _complex_list(re, im, field: str):
    re = list(re or [])
    im = list(im) if im is not None else [0.0] * len(re)
    if len(im) != len(re):
        raise SpecError(field, "real and imaginary parts differ in length")
    return np.array(re, dtype=float) + 1j * np.array(im, dtype=float)


def _cplx(obj) -> complex:
    return complex(obj["re"], obj.get("im", 0.0))


def validate(spec: dict) -> None:
    if not isinstance(spec, dict):
        raise SpecError("", "element spec must be a JSON object")
    algebra = spec.get("algebra")
    if algebra not in SCHEMAS:
        raise SpecError("algebra", f"expected one of {sorted(SCHEMAS)}, got {algebra!r}")
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(SCHEMAS[algebra]).iter_errors(spec))
    if err is not None:
        field = ".".join(str(p) for p in err.absolute_path) or "(root)"
        raise SpecError(field, err.message)


def parse_element(spec: dict):
    """Build the algebra element described by ``spec``."""
    validate(spec)
    algebra = spec["algebra"]
    try:
        if algebra == "C":
            return _parse_c(spec)
        if algebra == "linf":
            return _parse_linf(spec)
        return _parse_disk(spec)
    except SpecError:
        raise
    except ValueError as exc:
        raise SpecError(_guess_field(str(exc)), str(exc)) from exc


def _guess_field(msg: str) -> str:
    for name in ("a", "b", "nodes", "values", "zeros", "gamma", "coefficients"):
        if msg.startswith(name + " ") or f" {name} " in msg:
            return name
    return ""


def _parse_c(spec):
    a, b = float(spec["a"]), float(spec["b"])
    if not a < b:
        raise SpecError("a", "a must be < b")
    rep = spec["repr"]
    if rep["kind"] == "grid":
        if "re" not in rep:
            raise SpecError("repr.re", "grid representation needs 're'")
        vals = _complex_list(rep["re"], rep.get("im"), "repr.im")
        if len(vals) < 2:
            raise SpecError("repr.re", "grid needs at least 2 values")
        nodes = rep.get("nodes")
        return GridFunction(a, b, vals, None if nodes is None else np.array(nodes, dtype=float))
    if "coeffs_re" not in rep:
        raise SpecError("repr.coeffs_re", "poly representation needs 'coeffs_re'")
    coeffs = _complex_list(rep["coeffs_re"], rep.get("coeffs_im"), "repr.coeffs_im")
    if len(coeffs) == 0:
        raise SpecError("repr.coeffs_re", "need at least one coefficient")
    return RealPolynomial(coeffs, a, b, rep.get("basis", "monomial"))


def _parse_linf(spec):
    prefix = _complex_list(spec.get("prefix_re"), spec.get("prefix_im"), "prefix_im")
    t = spec["tail"]
    kind = t["kind"]
    const = complex(t.get("re", 0.0), t.get("im", 0.0))
    scale = complex(t.get("scale_re", 0.0), t.get("scale_im", 0.0))
    if kind == "const":
        if "re" not in t:
            raise SpecError("tail.re", "constant tail needs 're'")
        tail = Tail(const, 0)
    elif kind == "recip":
        if "scale_re" not in t:
            raise SpecError("tail.scale_re", "reciprocal tail needs 'scale_re'")
        tail = Tail(0, scale)
    elif kind == "zero":
        tail = Tail()
    else:
        tail = Tail(const, scale)
    return BoundedSequence(tuple(prefix), tail)


def _parse_disk(spec):
    poly = spec.get("poly", {"re": [1.0]})
    P = ComplexPolynomial(_complex_list(poly["re"], poly.get("im"), "poly.im"))
    bl = spec.get("blaschke")
    B = None
    if bl is not None:
        zeros = [_cplx(z) for z in bl["zeros"]]
        for i, z in enumerate(zeros):
            if not abs(z) < 1:
                raise SpecError(f"blaschke.zeros.{i}", "Blaschke zeros must satisfy |z| < 1")
        gamma = _cplx(bl["gamma"]) if "gamma" in bl else 1 + 0j
        if abs(abs(gamma) - 1) > 1e-12:
            raise SpecError("blaschke.gamma", "|gamma| must equal 1")
        B = BlaschkeProduct(tuple(zeros), gamma)
    return DiskElement(P, B)


def load_spec(path) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("", f"invalid JSON: {exc}") from exc


def _re_im(values) -> tuple:
    v = np.asarray(values, dtype=complex)
    return [float(x) for x in v.real], [float(x) for x in v.imag]


def element_to_spec(x) -> dict:
    """Inverse of :func:`parse_element`."""
    if isinstance(x, GridFunction):
        re, im = _re_im(x.values)
        rep = {"kind": "grid", "re": re, "im": im}
        if not x.is_uniform:
            rep["nodes"] = [float(t) for t in x.nodes]
        return {"algebra": "C", "a": x.a, "b": x.b, "repr": rep}
    if isinstance(x, RealPolynomial):
        re, im = _re_im(x.coefficients)
        return {"algebra": "C", "a": x.a, "b": x.b, "repr": {"kind": "poly", "coeffs_re": re, "coeffs_im": im, "basis": x.basis}}
    if isinstance(x, BoundedSequence):
        re, im = _re_im(x.prefix)
        t = x.tail
        if t.kind == "zero":
            tail = {"kind": "zero"}
        elif t.kind == "const":
            tail = {"kind": "const", "re": t.const.real, "im": t.const.imag}
        elif t.kind == "recip":
            tail = {"kind": "recip", "scale_re": t.scale.real, "scale_im": t.scale.imag}
        else:
            tail = {"kind": "affine", "re": t.const.real, "im": t.const.imag, "scale_re": t.scale.real, "scale_im": t.scale.imag}
        return {"algebra": "linf", "prefix_re": re, "prefix_im": im, "tail": tail}
    if isinstance(x, DiskElement):
        re, im = _re_im(x.poly.coefficients)
        out = {"algebra": "disk", "poly": {"re": re, "im": im}}
        if x.blaschke is not None:
            out["blaschke"] = {
                "zeros": [{"re": z.real, "im": z.imag} for z in x.blaschke.zeros],
                "gamma": {"re": x.blaschke.gamma.real, "im": x.blaschke.gamma.imag},
            }
        return out
    raise TypeError(f"cannot serialize {type(x).__name__}")
