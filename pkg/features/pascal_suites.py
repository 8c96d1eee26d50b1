#!/usr/bin/env python3
"""
Pascal line verification suites
Formula against the cross-hair construction, representative independence, equivariance and distinctness
"""

import random
from typing import Any, Dict, List

from core.pascal import all_pascals, crosshair_pascal, eval_pascal, pascals_pairwise_distinct
from core.projgeom import Mobius, induced_plane_map, mobius_conjugate, transform_line
from core.sextuple import Sextuple, random_sextuple
from core.symbols import enumerate_symbols
from features.base_suite import BaseVerificationSuite, CheckResult, check
from utils.helpers import random_distinct_rationals


class PascalAgreementSuite(BaseVerificationSuite):
    """The closed-form Pascal equals the cross-hair line for every symbol"""

    suite_id = 'pascal-agreement'

    def get_suite_name(self) -> str:
        return "Pascal formula against the cross-hair construction"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        symbols = enumerate_symbols()

        agreement: List[Dict[str, Any]] = []
        for _ in range(samples):
            h = random_sextuple(rng, **box)
            for s in symbols:
                formula, construction = eval_pascal(h, s), crosshair_pascal(h, s)
                if formula is None or formula != construction:
                    agreement.append({'sextuple': h.to_json(), 'symbol': str(s),
                                      'formula': str(formula), 'crosshair': str(construction)})

        sweep = max(1, samples // 50)
        representatives: List[Dict[str, Any]] = []
        for _ in range(sweep):
            h = random_sextuple(rng, **box)
            for s in symbols:
                lines = {eval_pascal(h, s, grid) for grid in s.representatives()}
                if len(lines) != 1:
                    representatives.append({'sextuple': h.to_json(), 'symbol': str(s)})

        # a random Mobius sends one letter to infinity; the Pascal must follow the induced collineation
        equivariance: List[Dict[str, Any]] = []
        for _ in range(sweep):
            h = random_sextuple(rng, **box)
            p, q, r = h['A'], h['B'], h['C']
            m = Mobius.sending_to_standard(p, q, r)
            image = mobius_conjugate(m, h)
            matrix = induced_plane_map(m)
            for s in symbols:
                if eval_pascal(image, s) != transform_line(matrix, eval_pascal(h, s)):
                    equivariance.append({'sextuple': h.to_json(), 'symbol': str(s)})

        return [
            CheckResult("60 symbols enumerated", len(symbols) == 60, f"{len(symbols)} symbols"),
            check("formula equals cross-hair line", agreement, samples * len(symbols), "symbol evaluations"),
            check("all 12 representatives give the same line", representatives, sweep * len(symbols),
                  "symbol evaluations"),
            check("Pascal follows Mobius maps through infinity", equivariance, sweep * len(symbols),
                  "symbol evaluations"),
        ]


class PedoeSuite(BaseVerificationSuite):
    """Sixty distinct Pascals on generic sextuples"""

    suite_id = 'pedoe'

    def get_suite_name(self) -> str:
        return "Distinctness of the 60 Pascals"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        failures: List[Dict[str, Any]] = []
        for _ in range(samples):
            h = random_sextuple(rng, **box)
            lines = list(all_pascals(h).values())
            if not pascals_pairwise_distinct(lines):
                failures.append({'sextuple': h.to_json(), 'distinct': len(set(lines))})

        # a sextuple through infinity is generic too
        values: List[Any] = random_distinct_rationals(rng, 5, **box)
        values.append(None)
        at_infinity = Sextuple.from_values(values)
        infinity_ok = pascals_pairwise_distinct(list(all_pascals(at_infinity).values()))

        return [
            check("60 pairwise distinct Pascals", failures, samples, "sextuples"),
            CheckResult("distinct Pascals with F at infinity", infinity_ok, str(at_infinity)),
        ]
