import json
from fractions import Fraction

import pytest
from hypothesis import given

from core.errors import ParseError
from core.wire import dump_json, format_rational, load_json_argument, parse_parameter, parse_rational
from tests.strategies import rationals


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)),
    ("-7/3", Fraction(-7, 3)),
    ("+4/6", Fraction(2, 3)),
    (" 5 / 10 ", Fraction(1, 2)),
    (12, Fraction(12)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["3//4", "1/0", "1.5", "", "a/b", "2/-3", True, 1.5, None])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


@pytest.mark.parametrize("text", ["inf", "INF", " Infinity ", "∞"])
def test_parse_parameter_infinity(text):
    assert parse_parameter(text) is None


@given(value=rationals)
def test_format_parse_agree(value: Fraction):
    assert parse_parameter(format_rational(value)) == value


def test_format_rational():
    assert format_rational(None) == "inf"
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(8, 2)) == "4"


def test_load_json_inline_and_file(tmp_path):
    assert load_json_argument('{"A": "1"}') == {'A': '1'}
    path = tmp_path / "payload.json"
    path.write_text(json.dumps({'P': '1'}), encoding='utf-8')
    assert load_json_argument(str(path)) == {'P': '1'}


def test_load_json_errors(tmp_path):
    with pytest.raises(ParseError):
        load_json_argument('{"A": ')
    with pytest.raises(ParseError):
        load_json_argument(str(tmp_path / "missing.json"))


def test_dump_json_is_sorted():
    assert dump_json({'b': 1, 'a': [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}'
