import logging
from fractions import Fraction

import pytest

from utils.helpers import (SafeExecutor, format_duration, logger, make_rng, random_distinct_rationals, safe_log,
                           scaled_count, set_log_level)


@pytest.fixture
def restore_level():
    level = logger.level
    yield
    logger.setLevel(level)


def test_safe_log_levels(caplog):
    caplog.set_level(logging.DEBUG, logger="pascal")
    safe_log("lines agree", "warning")
    safe_log("no such level", "chatty")
    assert [(r.name, r.levelname, r.getMessage()) for r in caplog.records] == [
        ("pascal", "WARNING", "lines agree"),
        ("pascal", "INFO", "no such level"),
    ]


def test_set_log_level(restore_level):
    set_log_level("debug")
    assert logger.level == logging.DEBUG
    set_log_level("loud")
    assert logger.level == logging.WARNING


def test_safe_executor_records_the_error(caplog):
    with SafeExecutor("join") as executor:
        raise ValueError("coincident elements")
    assert not executor.success
    assert str(executor.error) == "coincident elements"
    assert "Operation failed: join - coincident elements" in caplog.text
    with pytest.raises(KeyError):
        with SafeExecutor("lookup", reraise=True):
            raise KeyError("G")


def test_sampling_is_seeded():
    first = random_distinct_rationals(make_rng(3), 6, exclude=(Fraction(0),))
    assert first == random_distinct_rationals(make_rng(3), 6, exclude=(Fraction(0),))
    assert len(set(first)) == 6 and Fraction(0) not in first


def test_counts_and_durations():
    assert scaled_count(20, 0.5) == 10
    assert scaled_count(1, 0.01) == 1
    assert format_duration(3.4) == "3.4s"
    assert format_duration(125) == "2m 5.0s"
