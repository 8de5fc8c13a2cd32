"""JSON document format for IFPS sets.

A document looks like::

    {"universe": ["u1", "u2"],
     "parameters": ["x1", "x2"],
     "entries": {"x1": {"alpha": 0.7, "beta": 0.3, "support": ["u1"]}}}

Parameters without an entry read as (0, 1, []). Serialization is
canonical: keys and id lists sorted, default entries omitted, degrees
rounded to 9 decimal places and printed in shortest round-trip form.
"""

from __future__ import annotations

import json
import sys
from decimal import Decimal

from .ifs_core import DomainError
from .ifps_core import IFPSSet, make_ifps

MAX_DECIMALS = 9
TOP_KEYS = {"universe", "parameters", "entries"}
ENTRY_KEYS = {"alpha", "beta", "support"}


class ParseError(DomainError):
    """Malformed document. ``line`` and ``column`` are set for JSON syntax errors."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        if line is not None:
            message = f"line {line} column {column}: {message}"
        super().__init__(message)


def _reject_constant(name):
    raise ParseError(f"non-finite number {name} is not allowed")


def _degree(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, Decimal)):
        raise ParseError(f"{where} must be a number, got {value!r}")
    if isinstance(value, Decimal):
        exponent = value.normalize().as_tuple().exponent
        if isinstance(exponent, int) and exponent < -MAX_DECIMALS:
            raise ParseError(f"{where} has more than {MAX_DECIMALS} decimal places: {value}")
    return float(value)


def _id_list(value, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{where} must be a list of strings")
    return value


def parse_ifps(document: str) -> IFPSSet:
    try:
        data = json.loads(document, parse_float=Decimal, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(data) - TOP_KEYS
    if unknown:
        raise ParseError(f"unknown top-level keys: {sorted(unknown)}")
    missing = {"universe", "parameters"} - set(data)
    if missing:
        raise ParseError(f"missing top-level keys: {sorted(missing)}")
    universe = _id_list(data["universe"], "universe")
    params = _id_list(data["parameters"], "parameters")
    raw_entries = data.get("entries", {})
    if not isinstance(raw_entries, dict):
        raise ParseError("entries must be an object keyed by parameter")
    entries = {}
    for x, body in raw_entries.items():
        if not isinstance(body, dict):
            raise ParseError(f"entry for parameter {x!r} must be an object")
        bad = set(body) - ENTRY_KEYS
        if bad:
            raise ParseError(f"entry for parameter {x!r} has unknown keys: {sorted(bad)}")
        if "alpha" not in body or "beta" not in body:
            raise ParseError(f"entry for parameter {x!r} needs both alpha and beta")
        alpha = _degree(body["alpha"], f"alpha of parameter {x!r}")
        beta = _degree(body["beta"], f"beta of parameter {x!r}")
        support = _id_list(body.get("support", []), f"support of parameter {x!r}")
        if len(set(support)) != len(support):
            raise ParseError(f"support of parameter {x!r} repeats an element")
        entries[x] = (alpha, beta, support)
    return make_ifps(universe, params, entries)


def _number(v: float) -> float:
    return round(v, MAX_DECIMALS) + 0.0


def _entry(alpha: float, beta: float, support) -> dict:
    alpha, beta = _number(alpha), _number(beta)
    if (alpha, beta) == (0.0, 1.0) and support:
        # rounding must not land on (0, 1), which forbids a support
        beta = 1.0 - 10.0 ** -MAX_DECIMALS
    return {"alpha": alpha, "beta": beta, "support": sorted(support)}


def to_document(k: IFPSSet) -> dict:
    return {
        "universe": list(k.universe),
        "parameters": list(k.params),
        "entries": {x: _entry(*e) for x, e in sorted(k.entries.items())},
    }


def serialize_ifps(k: IFPSSet) -> str:
    return json.dumps(to_document(k), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load(path: str) -> IFPSSet:
    if path == "-":
        return parse_ifps(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_ifps(fh.read())
