import random
from typing import List

import pytest

from core.errors import GeometryError
from features.base_suite import BaseVerificationSuite, CheckResult, check
from utils.suite_registry import SuiteRegistry

ALL_SUITES = ['prop-2-2', 'indeterminacy', 'pascal-agreement', 'pedoe', 'example-3-3', 'prop-4-1', 'prop-4-2',
              'thm-4-2', 'codim2', 'chasles', 'kirkman', 'steiner', 'degeneration']


def test_registry_order():
    assert SuiteRegistry.suite_ids() == ALL_SUITES
    assert all(SuiteRegistry.is_suite_available(suite_id) for suite_id in ALL_SUITES)
    assert SuiteRegistry.get_available_suites()['pedoe']['module'] == 'features.pascal_suites'


def test_unknown_suite():
    assert not SuiteRegistry.is_suite_available('prop-9-9')
    with pytest.raises(ValueError, match="Unknown suite"):
        SuiteRegistry.get_handler('prop-9-9')


@pytest.mark.parametrize("suite_id, samples", [
    ('prop-2-2', None),
    ('indeterminacy', 20),
    ('pascal-agreement', 4),
    ('pedoe', 2),
    ('example-3-3', None),
    ('prop-4-1', 2),
    ('prop-4-2', 2),
    ('thm-4-2', 1),
    ('codim2', 2),
    ('chasles', 3),
    ('kirkman', 5),
    ('steiner', 40),
    ('degeneration', 8),
])
def test_suite_passes(suite_id, samples):
    report = SuiteRegistry.get_handler(suite_id).run(seed=5, samples=samples)
    assert report.suite == suite_id
    assert report.seed == 5
    assert report.checks
    assert report.passed, [c.to_json() for c in report.failed_checks()]


def test_runs_are_deterministic():
    first = SuiteRegistry.get_handler('prop-4-2').run(seed=99, samples=2)
    second = SuiteRegistry.get_handler('prop-4-2').run(seed=99, samples=2)
    assert first.to_json() == second.to_json()


def test_markdown_summary():
    report = SuiteRegistry.get_handler('example-3-3').run(seed=1)
    text = report.to_markdown()
    assert text.startswith("## Worked triple-point degeneration (example-3-3)")
    assert "**Verdict:** PASS" in text
    assert "- **PASS** limit passes through the triple point: 7 parameters" in text


class BrokenSuite(BaseVerificationSuite):
    suite_id = 'broken'

    def get_suite_name(self) -> str:
        return "Always fails"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        raise GeometryError("no such point")


def test_raising_suite_becomes_failed_check():
    report = BrokenSuite().run(seed=1, samples=3)
    assert not report.passed
    assert report.failed_checks()[0].name == "suite completed"
    assert "GeometryError: no such point" in report.failed_checks()[0].detail
    assert "**Verdict:** FAIL" in report.to_markdown()


def test_check_helper():
    passed = check("lines agree", [], 10, "sextuples")
    assert passed.passed and passed.detail == "10 sextuples"
    failed = check("lines agree", [{'i': 3}, {'i': 4}], 10, "sextuples")
    assert not failed.passed
    assert failed.detail == "2 of 10 sextuples failed"
    assert failed.to_json()['counterexample'] == {'i': 3}


def test_sample_scale(monkeypatch):
    monkeypatch.setenv('PASCAL_SAMPLE_SCALE', '0.5')
    assert SuiteRegistry.get_handler('pedoe').default_samples() == 10
    monkeypatch.setenv('PASCAL_SAMPLE_SCALE', 'lots')
    assert SuiteRegistry.get_handler('pedoe').default_samples() == 20


@pytest.mark.slow
@pytest.mark.parametrize("suite_id, expected_samples", [('thm-4-2', 10), ('pedoe', 20), ('kirkman', 200)])
def test_suite_passes_at_default_size(monkeypatch, suite_id, expected_samples):
    monkeypatch.delenv('PASCAL_SAMPLE_SCALE', raising=False)
    monkeypatch.delenv('PASCAL_SEED', raising=False)
    report = SuiteRegistry.get_handler(suite_id).run()
    assert report.samples == expected_samples
    assert report.passed, [c.to_json() for c in report.failed_checks()]
