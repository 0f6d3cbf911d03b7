"""JSON map-file ingestion and emission.

A map file is a single JSON document with the fields

    lambda       spiral angle in radians (real, |lambda| < pi/2)
    truncation   truncation order N (integer >= 1)
    signed_form  boolean class-shape assertion
    a            list of [re, im] pairs for indices n = 2..
    b            list of [re, im] pairs for indices n = 1..
    catalog      {"name": ..., "params": {...}} instead of a/b

Exactly one of (a and b) or catalog is present.  NaN/Inf never parse.
Emission is canonical: fixed key order, numbers at 9 significant digits, so
emit(parse(emit(x))) is byte-identical.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .construct import CATALOG_PARAMS, catalog
from .criteria import SpiralParams
from .harmonic import HarmonicMapSpec


class MapFileError(ValueError):
    """A map file failed to parse or validate; the message names the field."""


def format_number(x: float) -> str:
    """Canonical 9-significant-digit rendering used in every text output."""
    x = float(x) + 0.0  # normalize -0.0
    if not math.isfinite(x):
        raise ValueError("non-finite number in output")
    return format(x, ".9g")


@dataclass(frozen=True)
class MapDocument:
    """Parsed content of a map file (coefficients still in list form)."""

    lam: float
    truncation: int
    signed_form: bool
    a: Optional[list] = None
    b: Optional[list] = None
    catalog_name: Optional[str] = None
    catalog_params: dict = field(default_factory=dict)

    def build(self) -> tuple[HarmonicMapSpec, SpiralParams]:
        p = SpiralParams(self.lam)
        if self.catalog_name is not None:
            params = dict(self.catalog_params)
            alpha = params.pop("alpha", None)
            if isinstance(alpha, list):
                alpha = complex(alpha[0], alpha[1])
            m = catalog(self.catalog_name, p=p, alpha=alpha, order=self.truncation)
            return m, p
        a = [complex(re, im) for re, im in self.a]
        b = [complex(re, im) for re, im in self.b]
        m = HarmonicMapSpec(
            a=a, b=b, truncation_order=self.truncation, signed_form=self.signed_form
        )
        return m, p


def _check_pairs(raw, fld: str) -> list:
    if not isinstance(raw, list):
        raise MapFileError(f"field {fld!r} must be a list of [re, im] pairs")
    out = []
    for i, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)
        ):
            raise MapFileError(f"field {fld!r} entry {i} is not a [re, im] number pair")
        if not all(math.isfinite(v) for v in item):
            raise MapFileError(f"field {fld!r} entry {i} contains a non-finite value")
        out.append([float(item[0]), float(item[1])])
    return out


def parse_map_document(text: str) -> MapDocument:
    try:
        raw = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MapFileError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(raw, dict):
        raise MapFileError("map file must be a JSON object")
    known = {"lambda", "truncation", "signed_form", "a", "b", "catalog"}
    for key in raw:
        if key not in known:
            raise MapFileError(f"unknown field {key!r}")
    lam = raw.get("lambda")
    if not isinstance(lam, (int, float)) or isinstance(lam, bool) or not math.isfinite(lam):
        raise MapFileError("field 'lambda' must be a finite number")
    if not abs(lam) < math.pi / 2:
        raise MapFileError("field 'lambda' must satisfy |lambda| < pi/2")
    trunc = raw.get("truncation")
    if not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < 1:
        raise MapFileError("field 'truncation' must be an integer >= 1")
    signed = raw.get("signed_form", False)
    if not isinstance(signed, bool):
        raise MapFileError("field 'signed_form' must be a boolean")

    has_arrays = "a" in raw or "b" in raw
    has_catalog = "catalog" in raw
    if has_arrays == has_catalog:
        raise MapFileError("exactly one of coefficient arrays (a/b) or 'catalog' must be present")

    if has_catalog:
        cat = raw["catalog"]
        if not isinstance(cat, dict) or "name" not in cat:
            raise MapFileError("field 'catalog' must be an object with a 'name'")
        name = cat["name"]
        if name not in CATALOG_PARAMS:
            raise MapFileError(f"unknown catalog name {name!r}")
        params = cat.get("params", {})
        if not isinstance(params, dict):
            raise MapFileError("field 'catalog.params' must be an object")
        for key, value in params.items():
            ok = isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)
            ok = ok or (
                isinstance(value, list)
                and len(value) == 2
                and all(
                    isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)
                    for v in value
                )
            )
            if not ok:
                raise MapFileError(f"catalog parameter {key!r} must be a finite number or [re, im] pair")
        return MapDocument(
            lam=float(lam), truncation=trunc, signed_form=signed,
            catalog_name=name, catalog_params=dict(params),
        )

    a = _check_pairs(raw.get("a", []), "a")
    b = _check_pairs(raw.get("b", []), "b")
    return MapDocument(lam=float(lam), truncation=trunc, signed_form=signed, a=a, b=b)


def _reject_constant(name):
    raise MapFileError(f"non-finite JSON constant {name!r} rejected")


def load_map_file(path) -> tuple[HarmonicMapSpec, SpiralParams]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_map_document(fh.read()).build()


def document_from_map(m: HarmonicMapSpec, p: SpiralParams) -> MapDocument:
    return MapDocument(
        lam=p.lam,
        truncation=m.truncation_order,
        signed_form=m.signed_form,
        a=[[float(c.real), float(c.imag)] for c in m.a],
        b=[[float(c.real), float(c.imag)] for c in m.b],
    )


def _emit_pairs(pairs: list) -> str:
    if not pairs:
        return "[]"
    body = ", ".join(f"[{format_number(re)}, {format_number(im)}]" for re, im in pairs)
    return f"[{body}]"


def emit_map_document(doc: MapDocument) -> str:
    """Canonical text form; numbers at 9 significant digits."""
    lines = ["{"]
    lines.append(f'  "lambda": {format_number(doc.lam)},')
    lines.append(f'  "truncation": {doc.truncation},')
    lines.append(f'  "signed_form": {"true" if doc.signed_form else "false"},')
    if doc.catalog_name is not None:
        def fmt_param(v):
            if isinstance(v, list):
                return f"[{format_number(v[0])}, {format_number(v[1])}]"
            return format_number(v)

        params = ", ".join(
            f'"{k}": {fmt_param(v)}' for k, v in sorted(doc.catalog_params.items())
        )
        lines.append(f'  "catalog": {{"name": "{doc.catalog_name}", "params": {{{params}}}}}')
    else:
        lines.append(f'  "a": {_emit_pairs(doc.a)},')
        lines.append(f'  "b": {_emit_pairs(doc.b)}')
    lines.append("}")
    return "\n".join(lines) + "\n"
