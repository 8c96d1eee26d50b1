#!/usr/bin/env python3
"""
Wire formats for the Pascal geometry toolkit
Rational strings ("p/q", "p", "inf") and JSON payload helpers shared by the CLI and reports
"""

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from core.errors import ParseError

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def parse_rational(text: Union[str, int]) -> Fraction:
    """
    Parse "p/q" or "p" into an exact Fraction

    Raises:
        ParseError: on anything else, including a zero denominator
    """
    if isinstance(text, bool):
        raise ParseError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"Rationals travel as strings, got {type(text).__name__}")
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError(f"Malformed rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def parse_parameter(text: Union[str, int]) -> Optional[Fraction]:
    """A conic parameter: a rational string, or "inf" (returned as None)"""
    if isinstance(text, str) and text.strip().lower() in ('inf', 'infinity', '∞'):
        return None
    return parse_rational(text)


def format_rational(value: Optional[Fraction]) -> str:
    if value is None:
        return "inf"
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def load_json_argument(argument: str) -> Any:
    """
    Read a JSON payload given either inline or as a file path

    Raises:
        ParseError: if the file is missing or the text is not JSON
    """
    text = argument
    stripped = argument.lstrip()
    if not stripped.startswith(('{', '[')):
        path = Path(argument)
        if not path.is_file():
            raise ParseError(f"Input is neither inline JSON nor a readable file: {argument}")
        text = path.read_text(encoding='utf-8')
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON input: {e}") from e


def dump_json(payload: Any) -> str:
    """Deterministic JSON text (sorted keys, two-space indent)"""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
