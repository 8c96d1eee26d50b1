#!/usr/bin/env python3
"""
Classification verification suites
Resolved maps over (2,2,2) and codimension-two bases, and the Chasles perspectivity
"""

import random
from typing import Any, Dict, List

from core.classification import (NORMALIZED_SURJECTIVE_MATRIX, ConstantLine, Surjective, base_222,
                                 classify_222, classify_codim2, fiber_matrix)
from core.degeneration import (CODIM2_TYPES, DegenerationSpec, LLine222, degenerate_pascal, indeterminate_symbols,
                               random_base)
from core.errors import ConcurrencyError
from core.exactalg import matrix_rank
from core.projgeom import P1Point, ProjLine, ProjPoint, polar_triangle, tau
from core.sextuple import theta
from core.symbols import BASE_GRID, PascalSymbol
from features.base_suite import BaseVerificationSuite, CheckResult, check
from utils.helpers import random_distinct_rationals

NORMALIZED_TRIPLE = (P1Point.from_value(1), P1Point.from_value(0), P1Point.from_value(-1))
LLINE_PARAMETERS = (0, 1, 2, -5)


def lline_example(r: int) -> DegenerationSpec:
    """[ACD/FBE] at the marked point where BE and CD stay merged, fiber [1 : r]"""
    return DegenerationSpec(base_222(*NORMALIZED_TRIPLE), PascalSymbol("ACD/FBE"), LLine222("BE.CD", 1, r))


def random_triple(rng: random.Random, box: Dict[str, int]) -> List[P1Point]:
    return [P1Point.from_value(v) for v in random_distinct_rationals(rng, 3, **box)]


class ClassificationSuite(BaseVerificationSuite):
    """44 constant and 16 non-constant resolved maps over every (2,2,2) base"""

    suite_id = 'thm-4-2'

    def get_suite_name(self) -> str:
        return "Resolved Pascal maps over (2,2,2) bases"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        triples = [list(NORMALIZED_TRIPLE)] + [random_triple(rng, box) for _ in range(samples)]

        breakdown: List[Dict[str, Any]] = []
        pattern: List[Dict[str, Any]] = []
        locus: List[Dict[str, Any]] = []
        results = [classify_222(P, Q, R) for P, Q, R in triples]
        for (P, Q, R), result in zip(triples, results):
            where = {'P': str(P), 'Q': str(Q), 'R': str(R)}
            if (result.constant_count(), result.non_constant_count()) != (44, 16) or not result.matches_theorem():
                breakdown.append({**where, 'counts': result.counts()})
            for s, sampled, predicted in result.pattern_mismatches():
                pattern.append({**where, 'symbol': str(s), 'sampled': sampled, 'predicted': predicted})
            non_constant = {s for s, tag in result.entries.items() if not isinstance(tag, ConstantLine)}
            if non_constant != set(indeterminate_symbols(base_222(P, Q, R))):
                locus.append(where)

        normalized = base_222(*NORMALIZED_TRIPLE)
        surjective = [s for s, tag in results[0].entries.items() if isinstance(tag, Surjective)]
        base_symbol = PascalSymbol(BASE_GRID)
        matrix = fiber_matrix(normalized, base_symbol)
        ranks = {str(s): matrix_rank(fiber_matrix(normalized, s)) for s in surjective}

        lline: List[Dict[str, Any]] = []
        for r in LLINE_PARAMETERS:
            line = degenerate_pascal(lline_example(r))
            if line != ProjLine(-2, r, 2 - r):
                lline.append({'r': r, 'line': line.to_list()})

        return [
            check("44 constant / 16 non-constant with the full breakdown", breakdown, len(triples), "bases"),
            check("sampling agrees with the column-pattern rule", pattern, len(triples) * 60, "symbols"),
            check("non-constant symbols are exactly the undefined ones", locus, len(triples), "bases"),
            CheckResult("[ABC/FED] realizes the normalized fiber matrix",
                        base_symbol in surjective and tuple(map(tuple, matrix)) == NORMALIZED_SURJECTIVE_MATRIX,
                        str([[str(x) for x in row] for row in matrix])),
            CheckResult("surjective fiber matrices are invertible",
                        len(surjective) == 4 and all(rank == 3 for rank in ranks.values()), str(ranks)),
            check("L-line example is <-2, r, 2-r>", lline, len(LLINE_PARAMETERS), "parameters"),
        ]


class CodimTwoSuite(BaseVerificationSuite):
    """Pencils over (3,1,1,1) and (2,2,1,1) bases"""

    suite_id = 'codim2'

    def get_suite_name(self) -> str:
        return "Resolved Pascal maps over codimension-two bases"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        triple_failures: List[Dict[str, Any]] = []
        pair_failures: List[Dict[str, Any]] = []
        for i in range(samples):
            base_type = CODIM2_TYPES[i % 2]
            h = random_base(rng, base_type, **box)
            result = classify_codim2(h)
            if base_type == (3, 1, 1, 1):
                M = tau(h[theta(h).non_singleton_blocks()[0][0]])
                if len(result.pencils()) != 6 or not result.all_through(M) or result.center_mismatches():
                    triple_failures.append({'base': h.to_json(), 'pencils': len(result.pencils())})
            elif len(result.pencils()) != 4 or result.center_mismatches():
                pair_failures.append({'base': h.to_json(), 'pencils': len(result.pencils()),
                                      'mismatches': [str(s) for s in result.center_mismatches()]})
        return [
            check("six pencils through the triple point, every value through it", triple_failures,
                  (samples + 1) // 2, "bases"),
            check("four pencils through My . Nx", pair_failures, samples // 2, "bases"),
        ]


class PolarTriangleSuite(BaseVerificationSuite):
    """A triangle on the conic is in perspective with its polar triangle"""

    suite_id = 'chasles'

    def get_suite_name(self) -> str:
        return "Chasles perspectivity of polar triangles"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        failures: List[Dict[str, Any]] = []
        for _ in range(samples):
            P, Q, R = random_triple(rng, box)
            try:
                polar_triangle(P, Q, R)
            except ConcurrencyError as e:
                failures.append({'P': str(P), 'Q': str(Q), 'R': str(R), 'error': str(e)})

        normalized = polar_triangle(*NORMALIZED_TRIPLE)
        expected = {'P_prime': ProjPoint(2, -1, 0), 'CH': ProjPoint(3, 0, 1), 'ch': ProjLine(1, 0, 3)}
        actual = {name: getattr(normalized, name) for name in expected}

        return [
            check("PP', QQ', RR' concurrent and cross points collinear", failures, samples, "triangles"),
            CheckResult("normalized triangle P' = [2,-1,0], CH = [3,0,1], ch = <1,0,3>", actual == expected,
                        ", ".join(f"{name}={value}" for name, value in actual.items())),
        ]
