import json

import pytest

from app import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main

GENERIC = '{"A": "0", "B": "1", "C": "3", "D": "5", "E": "7", "F": "inf"}'
DOUBLE_POINT = '{"A": "0", "B": "0", "C": "1", "D": "2", "E": "3", "F": "5"}'
WORKED_BASE = {'A': '3', 'B': '3', 'C': '3', 'D': '1', 'E': '7', 'F': '4'}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_pascal_command(capsys):
    code, out = run(capsys, 'pascal', '--input', DOUBLE_POINT, '--symbol', 'ABC/FED')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['defined'] is True
    assert payload['line'] == [0, 2, -1]
    assert payload['symbol'] == 'ABC/FED'
    assert len(payload['crosshair_points']) == 3
    assert payload['sextuple']['F'] == '5'


def test_all_pascals(capsys):
    code, out = run(capsys, 'all-pascals', '--input', GENERIC)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload['pascals']) == 60
    assert payload['defined'] == 60
    assert payload['pairwise_distinct'] is True


def test_degenerate_command(capsys):
    spec = {'base': WORKED_BASE, 'symbol': 'ABC/FED', 'fiber': {'kind': 'codim2', 'coords': ['1', '2']}}
    code, out = run(capsys, 'degenerate', '--input', json.dumps(spec))
    assert code == EXIT_OK
    assert json.loads(out)['line'] == [9, -6, 1]


def test_input_from_file(tmp_path, capsys):
    path = tmp_path / 'h.json'
    path.write_text(GENERIC, encoding='utf-8')
    code, out = run(capsys, 'tri-symmetric', '--input', str(path))
    assert code == EXIT_OK
    assert json.loads(out) == {'sextuple': json.loads(GENERIC), 'tri_symmetric': False, 'witness': None}


def test_tri_symmetric_sextuple(capsys):
    code, out = run(capsys, 'tri-symmetric', '--input',
                    '{"A": "0", "B": "1", "C": "inf", "D": "2", "E": "1/2", "F": "-1"}')
    assert code == EXIT_OK
    assert json.loads(out)['tri_symmetric'] is True


def test_kirkman_for_one_symbol(capsys):
    code, out = run(capsys, 'kirkman', '--input', GENERIC, '--symbol', 'ABC/FED')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload['points']) == 1
    assert payload['undefined'] == []


def test_classify_default_triangle(capsys):
    code, out = run(capsys, 'classify-222')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['constant'] == 44


@pytest.mark.parametrize("argv", [
    ['pascal', '--input', '{"A": "1/0", "B": "1", "C": "2", "D": "3", "E": "4", "F": "5"}', '--symbol', 'ABC/FED'],
    ['pascal', '--input', GENERIC, '--symbol', 'ABC/FEA'],
    ['pascal', '--input', GENERIC],
    ['pascal', '--input', '{not json'],
    ['pascal', '--input', GENERIC, '--symbol', 'ABC/FED', '--format', 'xml'],
    ['verify', '--suite', 'prop-9-9'],
    ['verify', '--suite', 'prop-2-2', '--samples', '0'],
    ['pascal', '--input', GENERIC, '--symbol', 'ABC/FED', '--format', 'docx'],
    ['verify', '--suite', 'prop-2-2', '--format', 'docx'],
    ['frobnicate'],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_missing_letters_are_a_usage_error(capsys):
    argv = ['pascal', '--input', '{"A": "1", "B": "2"}', '--symbol', 'ABC/FED']
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_marked_interior_point_is_a_domain_error(capsys):
    spec = {'base': {'A': '1', 'B': '0', 'C': '-1', 'D': '-1', 'E': '0', 'F': '1'},
            'symbol': 'ABC/FED',
            'fiber': {'kind': 'interior222', 'coords': ['0', '0', '1']}}
    assert run(capsys, 'degenerate', '--input', json.dumps(spec))[0] == EXIT_DOMAIN


def test_coincident_triangle_is_a_domain_error(capsys):
    assert run(capsys, 'classify-222', '--input', '{"P": "1", "Q": "1", "R": "2"}')[0] == EXIT_DOMAIN


def test_verify_text(capsys):
    code, out = run(capsys, 'verify', '--suite', 'prop-2-2', '--format', 'text')
    assert code == EXIT_OK
    assert "**Verdict:** PASS" in out


def test_verify_json(capsys):
    code, out = run(capsys, 'verify', '--suite', 'example-3-3', '--seed', '3')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['passed'] is True
    assert payload['reports'][0]['suite'] == 'example-3-3'


def test_verify_word_report(tmp_path, capsys):
    out_file = tmp_path / 'report.docx'
    code, _ = run(capsys, 'verify', '--suite', 'prop-2-2', '--format', 'docx', '--out', str(out_file))
    assert code == EXIT_OK
    assert out_file.read_bytes()[:2] == b"PK"


def test_render_is_deterministic(capsys):
    argv = ['render', '--input', GENERIC, '--symbol', 'ABC/FED', '--kirkman']
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == EXIT_OK
    assert first == second
    assert first[1].startswith('<?xml')


def test_render_triangle_to_file(tmp_path, capsys):
    out_file = tmp_path / 'triangle.svg'
    code, out = run(capsys, 'render', '--input', '{"P": "1", "Q": "0", "R": "-1"}', '--out', str(out_file))
    assert code == EXIT_OK
    assert out == ""
    assert '<title>ch</title>' in out_file.read_text(encoding='utf-8')
