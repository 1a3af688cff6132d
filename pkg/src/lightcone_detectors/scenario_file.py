"""Reader for scenario files.

A scenario file is a small sectioned key/value document::

    # benchmark
    [physics]
    m = 1.0
    omega_eg = 1.0

    [source]
    y0 = 0
    y = 0, 0, 0

    [detector]
    x = 1 0 0
    t_i = 0.5
    t_f = 3
    kind = gd

    [numerics]
    rel_tol = 1e-8

Every key is optional and falls back to the benchmark defaults.  Unknown
sections or keys are errors (with a spelling suggestion), as are duplicate
keys and malformed values; all errors carry the line and column.
"""

from __future__ import annotations

import difflib
import math
from dataclasses import dataclass, fields
from typing import Dict, Optional, Tuple

from .errors import DomainError, ParseError, ScenarioError
from .quadrature import QuadratureConfig
from .scenario import DetectorKind, Scenario

__all__ = ["ScenarioFile", "parse_scenario", "load_scenario", "SCHEMA", "DEFAULT_CONFIG"]

SCHEMA: Dict[str, Tuple[str, ...]] = {
    "physics": ("m", "omega_eg", "c1", "m_eg_abs", "g"),
    "source": ("y0", "y"),
    "detector": ("x", "t_i", "t_f", "kind"),
    "numerics": tuple(f.name for f in fields(QuadratureConfig)),
}
_VECTORS = {"x", "y"}
_INTEGERS = {"max_panels"}
DEFAULT_CONFIG = QuadratureConfig(rel_tol=1e-8, uv_damping=0.05)


@dataclass(frozen=True)
class ScenarioFile:
    """Parsed document: scenario, numerical configuration, detector kind."""

    scenario: Scenario
    config: QuadratureConfig
    kind: Optional[DetectorKind]


def _suggest(word: str, options) -> str:
    close = difflib.get_close_matches(word, list(options), n=1, cutoff=0.6)
    return f"; did you mean {close[0]!r}?" if close else ""


def _number(text: str, line: int, col: int, key: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"{key}: cannot read {text!r} as a real number", line, col) from None
    if not math.isfinite(value):
        raise ParseError(f"{key}: value must be finite", line, col)
    return value


def parse_scenario(text: str) -> ScenarioFile:
    """Parse and validate a scenario document.

    Raises
    ------
    ParseError
        Malformed syntax, unknown section or key, duplicate key, bad value.
    ScenarioError
        Values that parse but violate a scenario or configuration invariant;
        ``field`` names the offending field and the message the line.
    """
    section = None
    values: Dict[str, object] = {}
    where: Dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped[0] in "#;":
            continue
        indent = len(raw) - len(raw.lstrip())
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError("section header is missing ']'", lineno, indent + len(stripped))
            name = stripped[1:-1].strip()
            if name not in SCHEMA:
                raise ParseError(f"unknown section [{name}]" + _suggest(name, SCHEMA),
                                 lineno, indent + 2)
            section = name
            continue
        if "=" not in stripped:
            raise ParseError("expected 'key = value'", lineno, indent + 1)
        if section is None:
            raise ParseError("key outside of any section", lineno, indent + 1)
        key_part, value_part = stripped.split("=", 1)
        key = key_part.strip()
        value_col = indent + len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        value_text = value_part.split("#", 1)[0].strip()
        if key not in SCHEMA[section]:
            everything = [k for keys in SCHEMA.values() for k in keys]
            raise ParseError(f"unknown key {key!r} in [{section}]" + _suggest(key, everything),
                             lineno, indent + 1)
        if key in values:
            raise ParseError(f"duplicate key {key!r} (first set on line {where[key]})",
                             lineno, indent + 1)
        if not value_text:
            raise ParseError(f"{key}: missing value", lineno, value_col)
        if key in _VECTORS:
            parts = value_text.replace(",", " ").split()
            if len(parts) != 3:
                raise ParseError(f"{key}: expected 3 reals, got {len(parts)}", lineno, value_col)
            values[key] = tuple(_number(p, lineno, value_col, key) for p in parts)
        elif key == "kind":
            try:
                values[key] = DetectorKind.parse(value_text)
            except ScenarioError as exc:
                raise ParseError(str(exc), lineno, value_col) from None
        elif key in _INTEGERS:
            number = _number(value_text, lineno, value_col, key)
            if number != int(number):
                raise ParseError(f"{key}: expected an integer", lineno, value_col)
            values[key] = int(number)
        else:
            values[key] = _number(value_text, lineno, value_col, key)
        where[key] = lineno

    physics = {k: v for k, v in values.items()
               if k not in SCHEMA["numerics"] and k != "kind"}
    try:
        scen = Scenario(**physics)
    except ScenarioError as exc:
        if exc.field == "window":
            line = where.get("t_f") or where.get("t_i")
        elif exc.field == "x":
            line = where.get("x") or where.get("y")
        else:
            line = where.get(exc.field)
        anchor = f" (line {line})" if line else ""
        raise ScenarioError(exc.field, str(exc).split(": ", 1)[-1] + anchor) from None

    numerics = {k: v for k, v in values.items() if k in SCHEMA["numerics"]}
    try:
        cfg = QuadratureConfig(**{**DEFAULT_CONFIG.__dict__, **numerics})
    except DomainError as exc:
        bad = next((k for k in numerics if k in str(exc)), "numerics")
        anchor = f" (line {where[bad]})" if bad in where else ""
        raise ScenarioError(bad, str(exc) + anchor) from None
    return ScenarioFile(scen, cfg, values.get("kind"))


def load_scenario(path) -> ScenarioFile:
    """Read and parse a scenario file from disk."""
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())
