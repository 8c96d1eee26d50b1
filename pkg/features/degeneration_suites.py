#!/usr/bin/env python3
"""
Degeneration verification suites
Worked codimension-two fibers and well-definedness of the limit along arcs
"""

import random
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from core.degeneration import (CODIM2_TYPES, TYPE_222, Codim2, DegenerationSpec, LLine222, degenerate_pascal,
                               limit_along_arc, random_degeneration_spec, scale_fiber)
from core.exactalg import UniPoly
from core.projgeom import Mobius, P1Point, ProjLine, ProjPoint, dot, incident, induced_plane_map, tau, transform_line
from core.sextuple import Sextuple
from core.symbols import BASE_GRID, PascalSymbol
from features.base_suite import BaseVerificationSuite, CheckResult, check
from utils.helpers import random_distinct_rationals, random_nonzero_rational

EXAMPLE_PARAMETERS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(7),
                      Fraction(-1, 3))


def triple_point_spec(m: Any, p: Any, d: Any = -1, e: Any = 0, f: Any = 1) -> DegenerationSpec:
    """[ABC/FED] over A = B = C = m with fiber [1 : p]"""
    base = Sextuple({'A': m, 'B': m, 'C': m, 'D': d, 'E': e, 'F': f})
    return DegenerationSpec(base, PascalSymbol(BASE_GRID), Codim2(1, p))


def double_pair_spec(m: Any, n: Any, p: Any) -> DegenerationSpec:
    """[ABC/FED] over A = B = m, E = F = n, C = 1, D = -1 with fiber [1 : p]"""
    base = Sextuple({'A': m, 'B': m, 'C': 1, 'D': -1, 'E': n, 'F': n})
    return DegenerationSpec(base, PascalSymbol(BASE_GRID), Codim2(1, p))


def triple_point_line(m: Fraction, p: Fraction) -> ProjLine:
    return ProjLine(-m * p, 2 * m - p * m + p, p - 2)


def double_pair_line(m: Fraction, n: Fraction, p: Fraction) -> ProjLine:
    return ProjLine(m * m * p - m * p - n * n - n,
                    m * m * p - 2 * m * p + n * n + 2 * n + p + 1,
                    -m * p - n + p - 1)


def double_pair_center(m: Fraction, n: Fraction) -> ProjPoint:
    return ProjPoint(n - m + 2, m + n, 2 * m * n + m - n)


class WorkedExampleSuite(BaseVerificationSuite):
    """Triple point at 3 with D, E, F at 1, 7, 4"""

    suite_id = 'example-3-3'

    def get_suite_name(self) -> str:
        return "Worked triple-point degeneration"

    def default_samples(self) -> int:
        return len(EXAMPLE_PARAMETERS)

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        mismatches: List[Dict[str, Any]] = []
        off_point: List[Dict[str, Any]] = []
        for p in EXAMPLE_PARAMETERS:
            line = degenerate_pascal(triple_point_spec(3, p, d=1, e=7, f=4))
            expected = ProjLine(3 * p + 21, -4 * p - 10, p + 1)
            if line != expected:
                mismatches.append({'p': str(p), 'line': line.to_list(), 'expected': expected.to_list()})
            if dot(line.coords, (1, 3, 9)) != 0:
                off_point.append({'p': str(p), 'line': line.to_list()})
        return [
            check("limit is <3p+21, -4p-10, p+1>", mismatches, len(EXAMPLE_PARAMETERS), "parameters"),
            check("limit passes through the triple point", off_point, len(EXAMPLE_PARAMETERS), "parameters"),
        ]


class TriplePointSuite(BaseVerificationSuite):
    """(3,1,1,1): the fiber maps isomorphically onto the pencil through the triple point"""

    suite_id = 'prop-4-1'

    def get_suite_name(self) -> str:
        return "Triple-point fibers"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        mismatches: List[Dict[str, Any]] = []
        off_point: List[Dict[str, Any]] = []
        collisions: List[Dict[str, Any]] = []
        for _ in range(samples):
            m = random_distinct_rationals(rng, 1, exclude=(Fraction(-1), Fraction(0), Fraction(1)), **box)[0]
            params = random_distinct_rationals(rng, 4, 9, 4)
            lines = []
            for p in params:
                line = degenerate_pascal(triple_point_spec(m, p))
                lines.append(line)
                if line != triple_point_line(m, p):
                    mismatches.append({'m': str(m), 'p': str(p), 'line': line.to_list()})
                if not incident(tau(P1Point.from_value(m)), line):
                    off_point.append({'m': str(m), 'p': str(p), 'line': line.to_list()})
            if len(set(lines)) != len(lines):
                collisions.append({'m': str(m), 'p': [str(p) for p in params]})
        total = samples * 4
        return [
            check("limit is <-mp, 2m-pm+p, p-2>", mismatches, total, "fiber points"),
            check("limit passes through M", off_point, total, "fiber points"),
            check("distinct fiber points give distinct lines", collisions, samples, "fibers"),
        ]


class DoublePairSuite(BaseVerificationSuite):
    """(2,2,1,1): the fiber maps onto the pencil through MQ . NP"""

    suite_id = 'prop-4-2'

    def get_suite_name(self) -> str:
        return "Double-pair fibers"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        box = self.random_box()
        mismatches: List[Dict[str, Any]] = []
        off_center: List[Dict[str, Any]] = []
        for _ in range(samples):
            m, n = random_distinct_rationals(rng, 2, exclude=(Fraction(-1), Fraction(1)), **box)
            center = double_pair_center(m, n)
            for p in random_distinct_rationals(rng, 4, 9, 4):
                line = degenerate_pascal(double_pair_spec(m, n, p))
                if line != double_pair_line(m, n, p):
                    mismatches.append({'m': str(m), 'n': str(n), 'p': str(p), 'line': line.to_list()})
                if not incident(center, line):
                    off_center.append({'m': str(m), 'n': str(n), 'p': str(p), 'line': line.to_list()})
        total = samples * 4
        return [
            check("limit matches the closed form", mismatches, total, "fiber points"),
            check("limit passes through [n-m+2, m+n, 2mn+m-n]", off_center, total, "fiber points"),
        ]


def random_perturbation(rng: random.Random, spec: DegenerationSpec) -> Dict[str, UniPoly]:
    """Higher-order terms on the non-anchor letters, beyond the order that fixes the fiber point"""
    order = 5 if isinstance(spec.fiber, LLine222) else 3
    perturbation: Dict[str, UniPoly] = {}
    for block in spec.partition.non_singleton_blocks():
        for letter in block[1:]:
            perturbation[letter] = UniPoly.monomial(order, random_nonzero_rational(rng, 9, 4)) \
                + UniPoly.monomial(order + 1, rng.randint(-5, 5))
    return perturbation


def chart_at_infinity(spec: DegenerationSpec) -> Optional[Tuple[Mobius, DegenerationSpec]]:
    """The map x -> 1/(x - v) sending the triple point v to infinity, and the same fiber point over the image"""
    if spec.partition.type != (3, 1, 1, 1):
        return None
    v = spec.base[spec.partition.non_singleton_blocks()[0][0]].value
    mobius = Mobius(0, 1, 1, -v)
    return mobius, DegenerationSpec(spec.base.map_points(mobius.apply), spec.symbol, spec.fiber)


class DegenerationSuite(BaseVerificationSuite):
    """The limit depends only on the fiber point"""

    suite_id = 'degeneration'

    def get_suite_name(self) -> str:
        return "Well-definedness of degenerate Pascals"

    def run_checks(self, rng: random.Random, samples: int) -> List[CheckResult]:
        kinds = [(base_type, False) for base_type in CODIM2_TYPES] + [(TYPE_222, False), (TYPE_222, True)]
        scaling: List[Dict[str, Any]] = []
        perturbed: List[Dict[str, Any]] = []
        representatives: List[Dict[str, Any]] = []
        charts: List[Dict[str, Any]] = []
        chart_total = 0
        for i in range(samples):
            base_type, lline = kinds[i % len(kinds)]
            spec = random_degeneration_spec(rng, base_type, lline)
            line = degenerate_pascal(spec)

            factor = random_nonzero_rational(rng, 9, 4)
            rescaled = DegenerationSpec(spec.base, spec.symbol, scale_fiber(spec.fiber, factor))
            if degenerate_pascal(rescaled) != line:
                scaling.append({'spec': spec.to_json(), 'factor': str(factor)})

            if limit_along_arc(spec, random_perturbation(rng, spec))[1] != line:
                perturbed.append({'spec': spec.to_json()})

            for grid in spec.symbol.representatives():
                if limit_along_arc(spec, grid=grid)[1] != line \
                        or limit_along_arc(spec, grid=grid, homogeneous=True)[1] != line:
                    representatives.append({'spec': spec.to_json(), 'grid': ["".join(row) for row in grid]})
                    break

            chart = chart_at_infinity(spec)
            if chart is not None:
                chart_total += 1
                mobius, moved = chart
                if degenerate_pascal(moved) != transform_line(induced_plane_map(mobius), line):
                    charts.append({'spec': spec.to_json()})

        return [
            check("invariant under fiber-coordinate scaling", scaling, samples, "specs"),
            check("invariant under higher-order arc perturbation", perturbed, samples, "specs"),
            check("independent of the symbol representative and evaluation path", representatives, samples,
                  "specs"),
            check("triple point at infinity agrees with the finite chart", charts, chart_total, "specs"),
        ]
