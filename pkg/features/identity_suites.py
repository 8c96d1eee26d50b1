#!/usr/bin/env python3
"""
Identity and indeterminacy verification suites
Symbolic decomposition identities of the Pascal coordinates and the set-theoretic indeterminacy locus
"""

import random
from typing import Any, Dict, List

from core.exactalg import verify_prop22_identities
from core.pascal import pascal_coordinates
from core.sextuple import Partition, Sextuple, all_partitions, is_indeterminate, random_on_polydiagonal
from core.symbols import BASE_GRID, PascalSymbol, enumerate_symbols, indeterminacy_partitions
from features.base_suite import BaseVerificationSuite, CheckResult, check
from utils.helpers import random_distinct_rationals


class IdentitySuite(BaseVerificationSuite):
    """u_i = P_i * delta + Q_i, u2 = delta, and vanishing under the six coincidence conditions"""

    suite_id = 'prop-2-2'

    def get_suite_name(self) -> str:
        return "Decomposition identities of the Pascal coordinates"

    def default_samples(self) -> int:
        return 1

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        return [CheckResult(item.name, item.passed, "" if item.passed else f"residual {item.residual}")
                for item in verify_prop22_identities()]


def sample_with_infinity(rng: random.Random, pi: Partition, numerator_bound: int, denominator_bound: int) -> Sextuple:
    """Point of the polydiagonal of pi, sometimes with one block sent to infinity"""
    if rng.random() < 0.25:
        values: List[Any] = random_distinct_rationals(rng, len(pi.blocks) - 1, numerator_bound, denominator_bound)
        values.insert(rng.randrange(len(pi.blocks)), None)
        return Sextuple({x: value for block, value in zip(pi.blocks, values) for x in block})
    return random_on_polydiagonal(rng, pi, numerator_bound, denominator_bound)


class IndeterminacySuite(BaseVerificationSuite):
    """The Pascal coordinates vanish exactly on the six indeterminacy polydiagonals"""

    suite_id = 'indeterminacy'

    def get_suite_name(self) -> str:
        return "Indeterminacy locus of a Pascal"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        base = PascalSymbol(BASE_GRID)
        locus = indeterminacy_partitions(base)
        per_component = self.sampling['points_per_component']

        on_failures: List[Dict[str, Any]] = []
        for pi in locus:
            for _ in range(per_component):
                h = sample_with_infinity(rng, pi, **box)
                if any(pascal_coordinates(h, base)):
                    on_failures.append({'partition': str(pi), 'sextuple': h.to_json()})

        off_failures: List[Dict[str, Any]] = []
        off_total = 0
        partitions = all_partitions()
        while off_total < samples:
            h = sample_with_infinity(rng, rng.choice(partitions), **box)
            if is_indeterminate(h, base):
                continue
            off_total += 1
            if not any(pascal_coordinates(h, base)):
                off_failures.append({'sextuple': h.to_json()})

        agreement_failures: List[Dict[str, Any]] = []
        sweep = max(1, samples // 20)
        for _ in range(sweep):
            h = sample_with_infinity(rng, rng.choice(partitions), **box)
            for s in enumerate_symbols():
                vanishes = not any(pascal_coordinates(h, s))
                if vanishes != is_indeterminate(h, s):
                    agreement_failures.append({'sextuple': h.to_json(), 'symbol': str(s), 'vanishes': vanishes})

        return [
            CheckResult("six partitions of [ABC/FED]",
                        [str(p) for p in locus] == ['ABC.D.E.F', 'A.B.C.DEF', 'AB.C.D.EF',
                                                    'A.BC.DE.F', 'AC.B.DF.E', 'AF.BE.CD'],
                        ", ".join(str(p) for p in locus)),
            check("coordinates vanish on each polydiagonal", on_failures, per_component * len(locus), "points"),
            check("coordinates nonzero off the locus", off_failures, off_total, "points"),
            check("vanishing matches the combinatorial test for all 60 symbols", agreement_failures,
                  sweep * 60, "symbol evaluations"),
        ]
