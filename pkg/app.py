#!/usr/bin/env python3
"""
Pascal geometry toolkit - command line
Pascal lines, degenerate Pascals, (2,2,2) classification, Kirkman/Steiner points, verification suites and SVG rendering
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from config.settings import OUTPUT_FORMATS, RunConfig, build_run_config, get_logging_settings, validate_configuration
from core.classification import Classifier222, classify_codim2
from core.degeneration import DegenerationSpec, limit_along_arc
from core.errors import GeometryError, PascalError
from core.hexagram import kirkman_points, steiner_points
from core.pascal import all_pascals, crosshair_points, eval_pascal, pascals_pairwise_distinct
from core.projgeom import P1Point
from core.reporter import generate_word_report
from core.sextuple import Sextuple, tri_symmetric
from core.symbols import PascalSymbol, kirkman_triple_of, steiner_triple_of
from core.wire import dump_json, format_rational, load_json_argument, parse_parameter
from ui.components import render_sextuple, render_triangle
from utils.helpers import SafeExecutor, safe_log, set_log_level
from utils.suite_registry import SuiteRegistry

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(PascalError):
    """Bad flag combination"""


@dataclass
class CommandOutput:
    """What a command produced: a JSON payload, SVG text or Word bytes"""
    payload: Any
    media: str = 'json'
    verification_failed: bool = False


def _line_json(line) -> Optional[List[int]]:
    return line.to_list() if line is not None else None


def _require_input(config: RunConfig) -> Any:
    if not config.input:
        raise UsageError(f"Command {config.command} needs --input")
    return load_json_argument(config.input)


def _require_symbol(config: RunConfig) -> PascalSymbol:
    if not config.symbol:
        raise UsageError(f"Command {config.command} needs --symbol")
    return PascalSymbol(config.symbol)


def _load_sextuple(config: RunConfig) -> Sextuple:
    return Sextuple.from_json(_require_input(config))


def _load_triangle(payload: Mapping[str, Any]) -> Tuple[P1Point, P1Point, P1Point]:
    return tuple(P1Point.from_value(parse_parameter(payload[name])) for name in ('P', 'Q', 'R'))


# Commands

def cmd_pascal(config: RunConfig) -> CommandOutput:
    h = _load_sextuple(config)
    symbol = _require_symbol(config)
    line = eval_pascal(h, symbol)
    return CommandOutput({
        'sextuple': h.to_json(),
        'symbol': str(symbol),
        'defined': line is not None,
        'line': _line_json(line),
        'crosshair_points': [p.to_list() if p is not None else None for p in crosshair_points(h, symbol)],
    })


def cmd_all_pascals(config: RunConfig) -> CommandOutput:
    h = _load_sextuple(config)
    pascals = all_pascals(h)
    return CommandOutput({
        'sextuple': h.to_json(),
        'pascals': {str(s): _line_json(line) for s, line in pascals.items()},
        'defined': sum(1 for line in pascals.values() if line is not None),
        'pairwise_distinct': pascals_pairwise_distinct(list(pascals.values())),
    })


def cmd_degenerate(config: RunConfig) -> CommandOutput:
    spec = DegenerationSpec.from_json(_require_input(config))
    valuation, line = limit_along_arc(spec)
    return CommandOutput({'spec': spec.to_json(), 'valuation': valuation, 'line': line.to_list()})


def cmd_classify_222(config: RunConfig) -> CommandOutput:
    payload = _require_input(config) if config.input else {'P': '1', 'Q': '0', 'R': '-1'}
    return CommandOutput(Classifier222().classify(*_load_triangle(payload)).to_json())


def cmd_classify_codim2(config: RunConfig) -> CommandOutput:
    return CommandOutput(classify_codim2(_load_sextuple(config)).to_json())


def _points_json(points: Mapping[Any, Any]) -> Dict[str, Optional[List[int]]]:
    return {str(triple): (point.to_list() if point is not None else None) for triple, point in points.items()}


def cmd_kirkman(config: RunConfig) -> CommandOutput:
    h = _load_sextuple(config)
    points = kirkman_points(h)
    if config.symbol:
        triple = kirkman_triple_of(config.symbol)
        points = {triple: points[triple]}
    return CommandOutput({
        'sextuple': h.to_json(),
        'points': _points_json(points),
        'undefined': sorted(str(kt) for kt, point in points.items() if point is None),
    })


def cmd_steiner(config: RunConfig) -> CommandOutput:
    h = _load_sextuple(config)
    points = steiner_points(h)
    if config.symbol:
        triple = steiner_triple_of(config.symbol)
        points = {triple: points[triple]}
    return CommandOutput({
        'sextuple': h.to_json(),
        'points': _points_json(points),
        'undefined': sorted(str(st) for st, point in points.items() if point is None),
    })


def cmd_tri_symmetric(config: RunConfig) -> CommandOutput:
    h = _load_sextuple(config)
    witness = tri_symmetric(h)
    return CommandOutput({
        'sextuple': h.to_json(),
        'tri_symmetric': witness is not None,
        'witness': format_rational(witness) if witness is not None else None,
    })


def cmd_verify(config: RunConfig) -> CommandOutput:
    """Run one suite or all of them; the payload is the list of reports"""
    suite = config.suite or 'all'
    suite_ids = SuiteRegistry.suite_ids() if suite == 'all' else [suite]
    handlers = [SuiteRegistry.get_handler(suite_id) for suite_id in suite_ids]
    reports = []
    for handler in handlers:
        with SafeExecutor(f"suite {handler.suite_id}", reraise=True):
            reports.append(handler.run(config.seed, config.samples))
    failed = any(not report.passed for report in reports)

    if config.output_format == 'docx':
        return CommandOutput(generate_word_report(report.to_markdown() for report in reports), 'docx', failed)
    if config.output_format == 'text':
        return CommandOutput("\n".join(report.to_markdown() for report in reports), 'text', failed)
    return CommandOutput({'passed': not failed, 'reports': [report.to_json() for report in reports]}, 'json', failed)


def cmd_render(config: RunConfig) -> CommandOutput:
    payload = _require_input(config)
    if isinstance(payload, Mapping) and {'P', 'Q', 'R'} <= set(payload):
        return CommandOutput(render_triangle(*_load_triangle(payload)), 'svg')
    h = Sextuple.from_json(payload)
    symbol = PascalSymbol(config.symbol) if config.symbol else None
    svg = render_sextuple(h, symbol, kirkman=bool(config.extras.get('kirkman')),
                          steiner=bool(config.extras.get('steiner')))
    return CommandOutput(svg, 'svg')


COMMANDS: Dict[str, Callable[[RunConfig], CommandOutput]] = {
    'pascal': cmd_pascal,
    'all-pascals': cmd_all_pascals,
    'degenerate': cmd_degenerate,
    'classify-222': cmd_classify_222,
    'classify-codim2': cmd_classify_codim2,
    'kirkman': cmd_kirkman,
    'steiner': cmd_steiner,
    'tri-symmetric': cmd_tri_symmetric,
    'verify': cmd_verify,
    'render': cmd_render,
}


def dispatch(config: RunConfig) -> Tuple[bool, Optional[CommandOutput], Optional[BaseException]]:
    """
    Run one command

    Returns:
        Tuple of (success, output, error)
    """
    handler = COMMANDS[config.command]
    with SafeExecutor(f"command {config.command}") as executor:
        output = handler(config)
    if not executor.success:
        return False, None, executor.error
    return True, output, None


def exit_code_for(error: BaseException) -> int:
    """Exit-code contract: 2 for input and usage problems, 3 for geometry"""
    if isinstance(error, GeometryError):
        return EXIT_DOMAIN
    if isinstance(error, (ValueError, KeyError, TypeError)):
        return EXIT_USAGE
    raise error


def render_output(output: CommandOutput, output_format: str) -> Any:
    """Text or bytes to write for a command output"""
    if output.media in ('svg', 'docx', 'text'):
        return output.payload
    if output_format == 'docx':
        raise UsageError("Word output is only available for verify")
    if output_format == 'text':
        return "\n".join(f"{key}: {value}" for key, value in sorted(output.payload.items())) + "\n"
    return dump_json(output.payload) + "\n"


def write_output(data: Any, out: Optional[str]):
    if isinstance(data, bytes):
        if not out:
            raise UsageError("Binary output needs --out")
        Path(out).write_bytes(data)
    elif out:
        Path(out).write_text(data, encoding='utf-8')
    else:
        sys.stdout.write(data)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pascal',
        description="Pascal lines of six points on the conic z0*z2 = z1^2, their degenerations and incidences.")
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('--input', help='Inline JSON or a path to a JSON file')
        sub.add_argument('--symbol', help='Pascal symbol such as "ABC/FED"')
        sub.add_argument('--format', choices=OUTPUT_FORMATS, default=None, help='Output format')
        sub.add_argument('--out', help='Write output to this file instead of stdout')
        return sub

    add_command('pascal', "Pascal line of one symbol")
    add_command('all-pascals', "All 60 Pascal lines")
    add_command('degenerate', "Pascal at a point of a blow-up fiber")
    add_command('classify-222', "Classify all symbols over A = F = P, B = E = Q, C = D = R")
    add_command('classify-codim2', "Classify all symbols over a (3,1,1,1) or (2,2,1,1) base")
    add_command('kirkman', "Kirkman points (all, or the triple of --symbol)")
    add_command('steiner', "Steiner points (all, or the triple of --symbol)")
    add_command('tri-symmetric', "Look for a tri-symmetric witness")
    verify = add_command('verify', "Run verification suites")
    verify.add_argument('--suite', default='all', help='Suite id, or "all"')
    verify.add_argument('--seed', type=int, default=None, help='Random seed (default PASCAL_SEED or built-in)')
    verify.add_argument('--samples', type=int, default=None, help='Override the suite sample count')
    render = add_command('render', "SVG of a sextuple (with --symbol) or of a triangle {P, Q, R}")
    render.add_argument('--kirkman', action='store_true', help='Mark the Kirkman points')
    render.add_argument('--steiner', action='store_true', help='Mark the Steiner points')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the command, write the output and return the exit code"""
    set_log_level(get_logging_settings()['level'])
    is_valid, errors = validate_configuration()
    if not is_valid:
        sys.stderr.write(f"Invalid configuration: {'; '.join(errors)}\n")
        return EXIT_USAGE

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if args.format is None:
        args.format = 'svg' if args.command == 'render' else 'json'

    try:
        config = build_run_config(args)
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    success, output, error = dispatch(config)
    if not success:
        sys.stderr.write(f"error: {error}\n")
        return exit_code_for(error)

    with SafeExecutor("write output") as executor:
        write_output(render_output(output, config.output_format), config.out)
    if not executor.success:
        sys.stderr.write(f"error: {executor.error}\n")
        return EXIT_USAGE
    if output.verification_failed:
        safe_log("Verification failed", "WARNING")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
