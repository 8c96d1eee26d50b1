#!/usr/bin/env python3
"""
Helper utilities for the Pascal geometry toolkit
Logging, timing, safe execution and seeded random sampling of rationals and sextuples
"""

import functools
import logging
import os
import random
import sys
import time
from fractions import Fraction
from typing import List, Optional, Sequence

# Logs go to stderr so JSON/SVG on stdout stays clean
logging.basicConfig(
    level=getattr(logging, os.environ.get('PASCAL_LOG_LEVEL', 'WARNING').upper(), logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

logger = logging.getLogger("pascal")

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def safe_log(message: str, level: str = "INFO"):
    """
    Log to the "pascal" logger (stderr)

    Args:
        message: Message to log
        level: One of LOG_LEVELS, any case; anything else logs at INFO
    """
    name = level.upper()
    if name not in LOG_LEVELS:
        name = "INFO"
    try:
        logger.log(getattr(logging, name), message)
    except Exception:
        # stdout carries command output
        sys.stderr.write(f"[{name}] {message}\n")


def set_log_level(level: str):
    """Apply a log level name to the toolkit logger (unknown names fall back to WARNING)"""
    name = level.upper()
    logger.setLevel(getattr(logging, name) if name in LOG_LEVELS else logging.WARNING)


def measure_execution_time(func):
    """
    Decorator to measure function execution time

    Args:
        func: Function to measure

    Returns:
        Decorated function
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        result = func(*args, **kwargs)
        execution_time = time.perf_counter() - start_time
        safe_log(f"{func.__name__} executed in {execution_time:.3f} seconds")
        return result

    return wrapper


def format_duration(seconds: float) -> str:
    """
    Format duration in human readable format

    Args:
        seconds: Duration in seconds

    Returns:
        Formatted duration string
    """
    if seconds < 60:
        return f"{seconds:.1f}s"
    minutes = int(seconds // 60)
    return f"{minutes}m {seconds % 60:.1f}s"


class SafeExecutor:
    """Context manager for safe code execution with logging"""

    def __init__(self, operation_name: str, reraise: bool = False):
        self.operation_name = operation_name
        self.reraise = reraise
        self.success = False
        self.error: Optional[BaseException] = None

    def __enter__(self):
        safe_log(f"Starting operation: {self.operation_name}", "DEBUG")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is None:
            self.success = True
            safe_log(f"Operation completed successfully: {self.operation_name}", "DEBUG")
            return False
        self.success = False
        self.error = exc_val
        safe_log(f"Operation failed: {self.operation_name} - {exc_val}", "ERROR")
        return not self.reraise


# Random sampling (all sampling goes through an explicit random.Random)

def make_rng(seed: int) -> random.Random:
    """Seeded generator; the seed fully determines every draw"""
    return random.Random(seed)


def random_rational(rng: random.Random, numerator_bound: int = 50, denominator_bound: int = 12) -> Fraction:
    """
    Draw a rational p/q from a box

    Args:
        rng: Seeded generator
        numerator_bound: |p| <= numerator_bound
        denominator_bound: 1 <= q <= denominator_bound

    Returns:
        The Fraction p/q
    """
    return Fraction(rng.randint(-numerator_bound, numerator_bound), rng.randint(1, denominator_bound))


def random_distinct_rationals(rng: random.Random, count: int, numerator_bound: int = 50,
                              denominator_bound: int = 12, exclude: Sequence[Fraction] = ()) -> List[Fraction]:
    """Draw `count` pairwise-distinct rationals, avoiding `exclude`"""
    values: List[Fraction] = []
    taken = set(exclude)
    while len(values) < count:
        value = random_rational(rng, numerator_bound, denominator_bound)
        if value not in taken:
            taken.add(value)
            values.append(value)
    return values


def random_nonzero_rational(rng: random.Random, numerator_bound: int = 50, denominator_bound: int = 12) -> Fraction:
    while True:
        value = random_rational(rng, numerator_bound, denominator_bound)
        if value:
            return value


def scaled_count(count: int, scale: float) -> int:
    """Apply a sample-count multiplier, never dropping below one sample"""
    return max(1, int(round(count * scale)))
