#!/usr/bin/env python3
"""
Configuration settings for the Pascal geometry toolkit
Sampling, rendering, logging and classification defaults with environment overrides
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from utils.helpers import LOG_LEVELS, safe_log

# Default settings
DEFAULT_SEED = 20240601
DEFAULT_NUMERATOR_BOUND = 60
DEFAULT_DENOMINATOR_BOUND = 12
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_SAMPLE_SCALE = 1.0

# Sample counts per verification suite
DEFAULT_SUITE_SAMPLES = {
    'indeterminacy': 1000,
    'pascal-agreement': 1000,
    'pedoe': 20,
    'prop-4-1': 10,
    'prop-4-2': 10,
    'thm-4-2': 10,
    'chasles': 20,
    'kirkman': 200,
    'steiner': 200,
    'degeneration': 100,
    'codim2': 10,
}

# Points on the polydiagonal sampled per indeterminacy partition / Kirkman component
DEFAULT_POINTS_PER_COMPONENT = 10
DEFAULT_KIRKMAN_POINTS_PER_COMPONENT = 5
DEFAULT_KIRKMAN_GENERIC_POINTS = 100

# Interior fiber points of a (2,2,2) blow-up used by the classifier; none is a coordinate point
DEFAULT_INTERIOR_SAMPLES: Tuple[Tuple[int, int, int], ...] = (
    (1, 2, 3),
    (2, -1, 5),
    (3, 1, -2),
    (-1, 4, 1),
    (5, -3, 2),
    (1, 1, 1),
    (2, 3, -7),
)

# Fiber parameters p of [1 : p] used by the codimension-two classifier
DEFAULT_CODIM2_SAMPLES: Tuple[str, ...] = ("0", "1", "2", "-3", "1/2", "5", "-7/3")

# Rendering (viewBox is in chart units where the conic is the unit circle)
DEFAULT_VIEWBOX = (-3.0, -3.0, 6.0, 6.0)
DEFAULT_CANVAS_SIZE = 600
DEFAULT_DECIMALS = 6
DEFAULT_COLORS = {
    'conic': '#1f3a5f',
    'point': '#b22222',
    'crosshair': '#2e8b57',
    'pascal': '#444444',
    'kirkman': '#8a2be2',
    'steiner': '#d2691e',
    'triangle': '#1f77b4',
    'polar': '#ff7f0e',
    'perspector': '#2ca02c',
    'warning': '#aa0000',
}

OUTPUT_FORMATS = ('json', 'svg', 'text', 'docx')


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        safe_log(f"Ignoring invalid {name}={raw!r}, using {default}", "WARNING")
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = float(raw)
        if value <= 0:
            raise ValueError(raw)
        return value
    except ValueError:
        safe_log(f"Ignoring invalid {name}={raw!r}, using {default}", "WARNING")
        return default


def get_sampling_settings() -> Dict[str, Any]:
    """
    Get random sampling settings

    Returns:
        Dictionary with seed, sampling box and per-suite sample counts
    """
    return {
        'seed': _env_int('PASCAL_SEED', DEFAULT_SEED),
        'numerator_bound': DEFAULT_NUMERATOR_BOUND,
        'denominator_bound': DEFAULT_DENOMINATOR_BOUND,
        'sample_scale': _env_float('PASCAL_SAMPLE_SCALE', DEFAULT_SAMPLE_SCALE),
        'suite_samples': dict(DEFAULT_SUITE_SAMPLES),
        'points_per_component': DEFAULT_POINTS_PER_COMPONENT,
        'kirkman_points_per_component': DEFAULT_KIRKMAN_POINTS_PER_COMPONENT,
        'kirkman_generic_points': DEFAULT_KIRKMAN_GENERIC_POINTS,
    }


def get_render_settings() -> Dict[str, Any]:
    """
    Get SVG rendering settings

    Returns:
        Dictionary with viewBox, canvas size, decimal precision and colours
    """
    return {
        'viewbox': DEFAULT_VIEWBOX,
        'canvas_size': DEFAULT_CANVAS_SIZE,
        'decimals': DEFAULT_DECIMALS,
        'colors': dict(DEFAULT_COLORS),
    }


def get_logging_settings() -> Dict[str, Any]:
    return {'level': os.environ.get('PASCAL_LOG_LEVEL', DEFAULT_LOG_LEVEL).upper()}


def get_classification_settings() -> Dict[str, Any]:
    """
    Get fiber sampling used to tell constant, pencil and surjective resolved maps apart

    Returns:
        Dictionary with interior (2,2,2) samples and codimension-two samples
    """
    return {
        'interior_samples': DEFAULT_INTERIOR_SAMPLES,
        'codim2_samples': DEFAULT_CODIM2_SAMPLES,
    }


def validate_configuration() -> tuple[bool, list]:
    """
    Validate the configured defaults

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    errors = []

    sampling = get_sampling_settings()
    if sampling['numerator_bound'] < 10 or sampling['denominator_bound'] < 1:
        errors.append("Sampling box too small for distinct rational draws")
    if any(count < 1 for count in sampling['suite_samples'].values()):
        errors.append("Suite sample counts must be positive")

    interior = get_classification_settings()['interior_samples']
    if len(interior) < 7:
        errors.append("At least 7 interior fiber samples are required")
    for sample in interior:
        if sum(1 for x in sample if x != 0) < 2:
            errors.append(f"Interior fiber sample {sample} is a coordinate point")

    render = get_render_settings()
    if render['viewbox'][2] <= 0 or render['viewbox'][3] <= 0:
        errors.append("viewBox must have positive size")
    if render['decimals'] < 0:
        errors.append("Decimal precision must be nonnegative")

    level = get_logging_settings()['level']
    if level not in LOG_LEVELS:
        errors.append(f"Unknown log level {level}")

    is_valid = len(errors) == 0
    if is_valid:
        safe_log("Configuration validation passed", "DEBUG")
    else:
        safe_log(f"Configuration validation failed: {errors}", "WARNING")
    return is_valid, errors


@dataclass
class RunConfig:
    """One CLI invocation; the seed determines every random draw"""
    command: str
    input: Optional[str] = None
    symbol: Optional[str] = None
    seed: int = DEFAULT_SEED
    suite: Optional[str] = None
    samples: Optional[int] = None
    output_format: str = 'json'
    out: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format: {self.output_format}")
        if self.samples is not None and self.samples < 1:
            raise ValueError("--samples must be positive")


def build_run_config(args: Any) -> RunConfig:
    """
    Build a RunConfig from parsed argparse arguments

    Args:
        args: argparse Namespace

    Returns:
        RunConfig (seed falls back to PASCAL_SEED, then the default)
    """
    seed = getattr(args, 'seed', None)
    if seed is None:
        seed = get_sampling_settings()['seed']
    known = {'command', 'input', 'symbol', 'seed', 'suite', 'samples', 'format', 'out'}
    extras = {k: v for k, v in vars(args).items() if k not in known and not k.startswith('_')}
    return RunConfig(
        command=args.command,
        input=getattr(args, 'input', None),
        symbol=getattr(args, 'symbol', None),
        seed=seed,
        suite=getattr(args, 'suite', None),
        samples=getattr(args, 'samples', None),
        output_format=getattr(args, 'format', None) or 'json',
        out=getattr(args, 'out', None),
        extras=extras,
    )
