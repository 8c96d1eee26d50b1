#!/usr/bin/env python3
"""
Base Verification Suite Interface
Defines the common interface and report types for all verification suites
"""

import random
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from config.settings import get_sampling_settings
from core.errors import PascalError
from utils.helpers import format_duration, make_rng, safe_log, scaled_count


@dataclass
class CheckResult:
    """Outcome of one property check"""
    name: str
    passed: bool
    detail: str = ""
    counterexample: Optional[Dict[str, Any]] = None

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {'name': self.name, 'passed': self.passed, 'detail': self.detail}
        if self.counterexample is not None:
            payload['counterexample'] = self.counterexample
        return payload


@dataclass
class SuiteReport:
    """All checks of one suite run"""
    suite: str
    title: str
    seed: int
    samples: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'title': self.title,
            'seed': self.seed,
            'samples': self.samples,
            'passed': self.passed,
            'checks': [check.to_json() for check in self.checks],
        }

    def to_markdown(self) -> str:
        """Markdown summary (headings, bullets, bold verdicts) for text and Word output"""
        verdict = "PASS" if self.passed else "FAIL"
        lines = [f"## {self.title} ({self.suite})", "",
                 f"**Verdict:** {verdict}", f"**Seed:** {self.seed}", f"**Samples:** {self.samples}", ""]
        for check in self.checks:
            mark = "PASS" if check.passed else "FAIL"
            line = f"- **{mark}** {check.name}"
            if check.detail:
                line += f": {check.detail}"
            lines.append(line)
        return "\n".join(lines) + "\n"


class BaseVerificationSuite(ABC):
    """Base class for all verification suites"""

    suite_id: str = ""

    def __init__(self):
        """Initialize base suite"""
        self.sampling = get_sampling_settings()

    @abstractmethod
    def get_suite_name(self) -> str:
        """Get display name for this suite"""
        pass

    @abstractmethod
    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        """
        Run the property checks

        Args:
            rng: Seeded generator owned by this run
            samples: Number of random cases

        Returns:
            One CheckResult per property
        """
        pass

    def default_samples(self) -> int:
        base = self.sampling['suite_samples'].get(self.suite_id, 1)
        return scaled_count(base, self.sampling['sample_scale'])

    def random_box(self) -> Dict[str, int]:
        return {'numerator_bound': self.sampling['numerator_bound'],
                'denominator_bound': self.sampling['denominator_bound']}

    def run(self, seed: Optional[int] = None, samples: Optional[int] = None) -> SuiteReport:
        """
        Run the suite with deterministic seeding

        Args:
            seed: Seed (defaults to the configured seed)
            samples: Sample count override

        Returns:
            SuiteReport; a check that raises becomes a failed check
        """
        seed = self.sampling['seed'] if seed is None else seed
        samples = samples or self.default_samples()
        report = SuiteReport(self.suite_id, self.get_suite_name(), seed, samples)
        safe_log(f"Running suite {self.suite_id} (seed={seed}, samples={samples})")
        start_time = time.perf_counter()
        try:
            report.checks.extend(self.run_checks(make_rng(seed), samples))
        except PascalError as e:
            safe_log(f"Suite {self.suite_id} aborted: {e}", "ERROR")
            report.checks.append(CheckResult("suite completed", False, f"{type(e).__name__}: {e}"))
        safe_log(f"Suite {self.suite_id} finished in {format_duration(time.perf_counter() - start_time)}")
        if not report.passed:
            safe_log(f"Suite {self.suite_id} failed: {[c.name for c in report.failed_checks()]}", "WARNING")
        return report


def check(name: str, failures: List[Dict[str, Any]], total: int, noun: str = "cases") -> CheckResult:
    """CheckResult for a sweep: passes when no failures were collected; the first failure is the counterexample"""
    if failures:
        return CheckResult(name, False, f"{len(failures)} of {total} {noun} failed", failures[0])
    return CheckResult(name, True, f"{total} {noun}")
