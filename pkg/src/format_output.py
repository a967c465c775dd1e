#!/usr/bin/env python3
"""
Output formatting utilities for the q-GT toolkit: JSON codecs, command-line
parsers and the verify table.
"""

import json
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from src.errors import ParseError, QGTError
from src.exact import QParam, parse_scalar
from src.gt import Path, Signature
from src.measures import FiniteMeasure, NuSeq
from src.qtoeplitz import QToeplitz


# ---------------------------------------------------------------------------
# Console

def status(message: str) -> None:
    """Emoji status line on stderr; stdout stays clean for results."""
    print(message, file=sys.stderr)


def emit(payload: Any) -> None:
    if isinstance(payload, str):
        print(payload)
    else:
        print(json.dumps(payload, indent=2))


def report_error(error: QGTError, as_json: bool = False) -> int:
    if as_json:
        print(json.dumps(error.to_dict()))
    else:
        status(f"❌ {type(error).__name__}: {error.message}")
    return error.exit_code


# ---------------------------------------------------------------------------
# Command-line parsing

def parse_int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in re.split(r"[\s,]+", text.strip()) if v]
    except ValueError:
        raise ParseError(f"expected integers, got {text!r}") from None


def parse_signature(text: str) -> Signature:
    """'2 0 -1' -> Signature((2, 0, -1))."""
    return Signature(tuple(parse_int_list(text)))


def parse_scalar_list(values: Sequence[str]) -> Tuple[Fraction, ...]:
    """Each argument may itself hold several space-separated rationals."""
    scalars = []
    for value in values:
        scalars.extend(parse_scalar(v) for v in value.split())
    return tuple(scalars)


def parse_q(text: str) -> QParam:
    return QParam(parse_scalar(text))


def parse_nu(text: str) -> NuSeq:
    return NuSeq.parse(text)


# ---------------------------------------------------------------------------
# Encoders

def encode_scalar(value: Fraction) -> Dict[str, str]:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def encode_signature(sig: Signature) -> Dict[str, Any]:
    return {"level": sig.level, "coords": list(sig.coords)}


def encode_path(path: Path) -> Dict[str, Any]:
    return {"levels": [encode_signature(s) for s in path.levels]}


def encode_tiling(coords: Sequence[Tuple[int, int]]) -> Dict[str, Any]:
    return {"horizontal_lozenges": [[n, x] for n, x in coords]}


def encode_measure(m: FiniteMeasure) -> Dict[str, Any]:
    return {
        "level": m.level,
        "masses": [[encode_signature(s), encode_scalar(w)] for s, w in m.items()],
        "tail": encode_scalar(m.tail),
    }


def encode_nu(nu: NuSeq) -> Dict[str, Any]:
    return {"prefix": list(nu.prefix), "tail": nu.tail}


def encode_qtoeplitz(m: QToeplitz) -> Dict[str, Any]:
    return {
        "q": encode_scalar(m.q.q),
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[encode_scalar(v) for v in row] for row in m.entries],
    }


# ---------------------------------------------------------------------------
# Decoders

def _field(data: Dict[str, Any], key: str):
    try:
        return data[key]
    except (KeyError, TypeError):
        raise ParseError(f"missing field {key!r}") from None


def decode_scalar(data: Dict[str, str]) -> Fraction:
    try:
        return Fraction(int(_field(data, "num")), int(_field(data, "den")))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed scalar {data!r}") from None


def decode_signature(data: Dict[str, Any]) -> Signature:
    sig = Signature(tuple(_field(data, "coords")))
    if sig.level != _field(data, "level"):
        raise ParseError(f"level field disagrees with coords in {data!r}")
    return sig


def decode_path(data: Dict[str, Any]) -> Path:
    return Path(tuple(decode_signature(s) for s in _field(data, "levels")))


def decode_tiling(data: Dict[str, Any]) -> List[Tuple[int, int]]:
    return [(int(n), int(x)) for n, x in _field(data, "horizontal_lozenges")]


def decode_measure(data: Dict[str, Any]) -> FiniteMeasure:
    masses = {decode_signature(s): decode_scalar(w) for s, w in _field(data, "masses")}
    return FiniteMeasure(int(_field(data, "level")), masses, decode_scalar(_field(data, "tail")))


def decode_nu(data: Dict[str, Any]) -> NuSeq:
    return NuSeq(tuple(_field(data, "prefix")), int(_field(data, "tail")))


def decode_qtoeplitz(data: Dict[str, Any]) -> QToeplitz:
    entries = tuple(tuple(decode_scalar(v) for v in row) for row in _field(data, "entries"))
    matrix = QToeplitz(QParam(decode_scalar(_field(data, "q"))), entries)
    if (matrix.rows, matrix.cols) != (_field(data, "rows"), _field(data, "cols")):
        raise ParseError("rows/cols fields disagree with entries")
    return matrix


# ---------------------------------------------------------------------------
# Human-readable tables

def format_measure_table(m: FiniteMeasure) -> str:
    lines = [f"{str(s):<24} {w}" for s, w in m.items()]
    if m.tail:
        lines.append(f"{'tail':<24} {m.tail}")
    return "\n".join(lines)


def encode_verify_results(results: Sequence[Any]) -> Dict[str, Any]:
    summary = {status: 0 for status in ("pass", "fail", "flag", "skip")}
    for r in results:
        summary[r.status] += 1
    return {
        "results": [
            {"suite": r.suite, "status": r.status, "checks": r.checks, "detail": r.detail, "witness": r.witness}
            for r in results
        ],
        "summary": summary,
    }


def format_verify_table(results: Sequence[Any]) -> str:
    """
    One row per check, in suite order; failing rows carry their witness.
    """
    width = max([len(r.suite) for r in results] + [5])
    lines = [f"{'suite':<{width}}  status  checks  detail"]
    for r in results:
        mark = {"pass": "✅ pass", "fail": "❌ fail", "flag": "⚠️ flag", "skip": "⏭ skip"}[r.status]
        detail = r.witness if r.status in ("fail", "flag") else r.detail
        lines.append(f"{r.suite:<{width}}  {mark}  {r.checks:>6}  {detail}")
    return "\n".join(lines)
