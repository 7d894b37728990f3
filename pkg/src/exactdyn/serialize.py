"""Deterministic wire format: problem files in, report envelopes out.

Everything on the wire is exact.  Rationals are "p/q" strings in lowest
terms with positive q (plain integers stay integers); floating quantities
are converted to exact dyadic rationals before serialization; algebraic
numbers travel as {min_poly, lo, hi}.  Serialization uses a fixed key
order (insertion order of the dicts built here) so identical inputs give
byte-identical output.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from .algnum import AlgebraicRadius
from .common import InputError
from .intpoly import IntPoly

KINDS = ("abelian", "lattice", "cone", "poly")


def rat_str(x) -> int | str:
    """Canonical wire form of an exact number: int, or "p/q" with q > 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def float_to_rat(x: float) -> int | str:
    """Exact dyadic rational of a float (never a float literal on the wire)."""
    num, den = float(x).as_integer_ratio()
    return rat_str(Fraction(num, den))


def parse_number(v) -> Fraction:
    """Accept integers and "p/q" strings; reject floats."""
    if isinstance(v, bool) or isinstance(v, float):
        raise InputError(f"not an exact number: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        parts = v.split("/")
        try:
            if len(parts) == 1:
                return Fraction(int(parts[0]))
            if len(parts) == 2:
                return Fraction(int(parts[0]), int(parts[1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {v!r}") from exc
    raise InputError(f"not an exact number: {v!r}")


def parse_int(v, field: str) -> int:
    f = parse_number(v)
    if f.denominator != 1:
        raise InputError(f"field {field!r} must be an integer, got {v!r}")
    return int(f)


def parse_int_matrix(rows, field: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, list) or not rows:
        raise InputError(f"field {field!r} must be a nonempty array of rows")
    return tuple(tuple(parse_int(v, field) for v in row) for row in rows)


def parse_rat_matrix(rows, field: str) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(rows, list) or not rows:
        raise InputError(f"field {field!r} must be a nonempty array of rows")
    return tuple(tuple(parse_number(v) for v in row) for row in rows)


def radius_record(r: AlgebraicRadius) -> dict:
    return {"min_poly": [rat_str(c) for c in r.min_poly.coeffs],
            "lo": rat_str(r.lo), "hi": rat_str(r.hi)}


def load_problem(path: str) -> dict:
    """Parse and validate a problem file; returns the raw record with its
    'kind' checked.  Field errors name the offending field."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: parse error at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(record, dict):
        raise InputError(f"{path}: top level must be an object")
    kind = record.get("kind")
    if kind not in KINDS:
        raise InputError(f"{path}: field 'kind' must be one of {KINDS}")
    return record


def canonical_problem(record: dict) -> str:
    """Canonical text of a problem record (fixed key order per kind)."""
    kind = record["kind"]
    out: dict[str, Any] = {"kind": kind}
    if kind == "abelian":
        out["n"] = parse_int(record.get("n"), "n")
        out["matrix"] = [list(r) for r in
                         parse_int_matrix(record.get("matrix"), "matrix")]
        out["has_translation"] = bool(record.get("has_translation", False))
    elif kind == "lattice":
        out["gram"] = [list(r) for r in
                       parse_int_matrix(record.get("gram"), "gram")]
        out["matrix"] = [list(r) for r in
                         parse_int_matrix(record.get("matrix"), "matrix")]
    elif kind == "cone":
        out["dim"] = parse_int(record.get("dim"), "dim")
        out["generators"] = [[rat_str(v) for v in row] for row in
                             parse_rat_matrix(record.get("generators"),
                                              "generators")]
        out["matrix"] = [[rat_str(v) for v in row] for row in
                         parse_rat_matrix(record.get("matrix"), "matrix")]
        if record.get("big") is not None:
            if not isinstance(record["big"], list):
                raise InputError("field 'big' must be an array")
            out["big"] = [rat_str(parse_number(v)) for v in record["big"]]
    elif kind == "poly":
        coeffs = record.get("coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise InputError("field 'coeffs' must be a nonempty array")
        out["coeffs"] = [parse_int(v, "coeffs") for v in coeffs]
    return json.dumps(out, separators=(",", ":"), ensure_ascii=True)


def input_digest(record: dict) -> str:
    return hashlib.sha256(canonical_problem(record).encode()).hexdigest()


def envelope(tool_version: str, record: dict, command: str,
             result: dict) -> str:
    """One line of machine-readable output."""
    env = {"tool_version": tool_version,
           "command": command,
           "input_digest": input_digest(record),
           "result": result}
    return json.dumps(env, separators=(",", ":"), ensure_ascii=True)


def poly_from_record(record: dict) -> IntPoly:
    coeffs = [parse_int(v, "coeffs") for v in record["coeffs"]]
    p = IntPoly(coeffs)
    if p.is_zero():
        raise InputError("zero polynomial")
    return p
