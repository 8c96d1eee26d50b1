#!/usr/bin/env python3
"""
Hexagrammum mysticum verification suites
Kirkman and Steiner concurrences, the Kirkman indeterminacy components and tri-symmetric sextuples
"""

import random
from fractions import Fraction
from typing import Any, Dict, List

from core.errors import ConcurrencyError
from core.hexagram import (kirkman_indeterminacy_components, kirkman_point, kirkman_points, steiner_points,
                           undefined_steiner_triples)
from core.pascal import all_pascals
from core.sextuple import LETTERS, Partition, Sextuple, random_on_polydiagonal, random_sextuple, tri_symmetric
from core.symbols import BASE_GRID, enumerate_symbols, kirkman_triple_of, kirkman_triples, steiner_triples
from features.base_suite import BaseVerificationSuite, CheckResult, check

TRI_SYMMETRIC_SEXTUPLE = (Fraction(0), Fraction(1), None, Fraction(2), Fraction(1, 2), Fraction(-1))


class KirkmanSuite(BaseVerificationSuite):
    """Sixty Kirkman points and where the base Kirkman point is undefined"""

    suite_id = 'kirkman'

    def get_suite_name(self) -> str:
        return "Kirkman points"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        triples = kirkman_triples()

        concurrency: List[Dict[str, Any]] = []
        for _ in range(samples):
            h = random_sextuple(rng, **box)
            try:
                points = kirkman_points(h, all_pascals(h))
            except ConcurrencyError as e:
                concurrency.append({'sextuple': h.to_json(), 'error': str(e)})
                continue
            undefined = [str(kt) for kt, point in points.items() if point is None]
            if undefined:
                concurrency.append({'sextuple': h.to_json(), 'undefined': undefined})

        base_triple = kirkman_triple_of(BASE_GRID)
        components = kirkman_indeterminacy_components()
        per_component = self.sampling['kirkman_points_per_component']
        on_components: List[Dict[str, Any]] = []
        for pi in components:
            for _ in range(per_component):
                h = random_on_polydiagonal(rng, pi, **box)
                if kirkman_point(h, base_triple) is not None:
                    on_components.append({'component': str(pi), 'sextuple': h.to_json()})

        generic_count = self.sampling['kirkman_generic_points']
        generic: List[Dict[str, Any]] = []
        for _ in range(generic_count):
            h = random_sextuple(rng, **box)
            if kirkman_point(h, base_triple) is None:
                generic.append({'sextuple': h.to_json()})

        doubled_count = max(5, samples // 10)
        doubled: List[Dict[str, Any]] = []
        for _ in range(doubled_count):
            pair = rng.sample(LETTERS, 2)
            h = random_on_polydiagonal(rng, Partition.from_blocks([pair]), **box)
            undefined = [str(kt) for kt, point in kirkman_points(h).items() if point is None]
            if undefined:
                doubled.append({'sextuple': h.to_json(), 'undefined': undefined})

        return [
            CheckResult("60 Kirkman triples", len(triples) == 60, f"{len(triples)} triples"),
            CheckResult("20 indeterminacy components",
                        len(components) == 20 and components.type_counts() == {(3, 1, 1, 1): 8, (2, 2, 1, 1): 12},
                        str(components.type_counts())),
            check("Kirkman triples concurrent and defined", concurrency, samples, "sextuples"),
            check("base Kirkman point undefined on every component", on_components,
                  per_component * len(components), "points"),
            check("base Kirkman point defined at generic sextuples", generic, generic_count, "sextuples"),
            check("all 60 defined with exactly one doubled point", doubled, doubled_count, "sextuples"),
        ]


class SteinerSuite(BaseVerificationSuite):
    """Twenty Steiner points and their failure at tri-symmetric sextuples"""

    suite_id = 'steiner'

    def get_suite_name(self) -> str:
        return "Steiner points"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        triples = steiner_triples()
        covered = [s for st in triples for s in st]

        concurrency: List[Dict[str, Any]] = []
        for _ in range(samples):
            h = random_sextuple(rng, **box)
            try:
                points = steiner_points(h)
            except ConcurrencyError as e:
                concurrency.append({'sextuple': h.to_json(), 'error': str(e)})
                continue
            undefined = [str(st) for st, point in points.items() if point is None]
            if undefined:
                concurrency.append({'sextuple': h.to_json(), 'undefined': undefined})

        special = Sextuple.from_values(TRI_SYMMETRIC_SEXTUPLE)
        witness = tri_symmetric(special)
        undefined = undefined_steiner_triples(special)

        generic_count = max(1, samples // 40)
        witnessed = [h.to_json() for h in (random_sextuple(rng, **box) for _ in range(generic_count))
                     if tri_symmetric(h) is not None]

        return [
            CheckResult("20 Steiner triples partition the 60 symbols",
                        len(triples) == 20 and sorted(covered) == sorted(enumerate_symbols()),
                        f"{len(triples)} triples"),
            check("Steiner triples concurrent and defined", concurrency, samples, "sextuples"),
            CheckResult("tri-symmetric witness for {0, 1, inf, 2, 1/2, -1}", witness is not None,
                        f"witness {witness}"),
            CheckResult("some Steiner point undefined at the tri-symmetric sextuple", bool(undefined),
                        f"{len(undefined)} undefined"),
            check("generic sextuples are not tri-symmetric", [{'sextuple': w} for w in witnessed], generic_count,
                  "sextuples"),
        ]
