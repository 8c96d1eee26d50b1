#!/usr/bin/env python3
"""
Classification of resolved Pascal maps over degenerate sextuples
Constant / pencil / surjective tags for all 60 symbols over (2,2,2) and codimension-two bases, with pattern-rule cross-checks
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from config.settings import get_classification_settings
from core.degeneration import (CODIM2_TYPES, Codim2, DegenerationSpec, Interior222,
                               assemble_arc, arc_triple, degenerate_pascal)
from core.errors import DegenerationSpecError
from core.exactalg import UniPoly, matrix_rank
from core.pascal import eval_pascal
from core.projgeom import (Matrix3, P1Point, PolarTriangle, ProjLine, ProjPoint, incident, join, meet,
                           polar_triangle, tau)
from core.sextuple import Sextuple, theta
from core.symbols import PascalSymbol, enumerate_symbols
from core.wire import parse_rational
from utils.helpers import measure_execution_time, safe_log

# Block names for the (2,2,2) base A = F -> P, B = E -> Q, C = D -> R
BLOCK_OF_LETTER = {'A': 'P', 'F': 'P', 'B': 'Q', 'E': 'Q', 'C': 'R', 'D': 'R'}

EXPECTED_222_COUNTS = {
    'chord PQ': 8, 'chord PR': 8, 'chord QR': 8,
    "perspective PP'": 4, "perspective QQ'": 4, "perspective RR'": 4,
    'ch': 8,
    'pencil P': 4, 'pencil Q': 4, 'pencil R': 4,
    'surjective': 4,
}

# Fiber-to-line matrix of [ABC/FED] at P = 1, Q = 0, R = -1 (line = q . M)
NORMALIZED_SURJECTIVE_MATRIX = ((0, -1, -1), (-2, 0, 2), (0, 1, -1))


@dataclass(frozen=True)
class ConstantLine:
    line: ProjLine
    kind: Optional[str] = None
    resolved: bool = False


@dataclass(frozen=True)
class Pencil:
    center: ProjPoint
    kind: Optional[str] = None


@dataclass(frozen=True)
class Surjective:
    kind: str = 'surjective'


Tag = Union[ConstantLine, Pencil, Surjective]


def tag_label(tag: Tag) -> str:
    if isinstance(tag, Surjective):
        return 'surjective'
    return tag.kind or ('constant' if isinstance(tag, ConstantLine) else 'pencil')


def tag_to_json(tag: Tag) -> Dict[str, Any]:
    if isinstance(tag, ConstantLine):
        return {'tag': 'constant', 'kind': tag.kind, 'line': tag.line.to_list(), 'resolved': tag.resolved}
    if isinstance(tag, Pencil):
        return {'tag': 'pencil', 'kind': tag.kind, 'center': tag.center.to_list()}
    return {'tag': 'surjective', 'kind': 'surjective'}


def tag_from_samples(lines: Sequence[ProjLine]) -> Tag:
    """
    Decide constant / pencil / surjective from sampled fiber values

    Rank 1 of the sampled line vectors means constant, rank 2 a pencil
    (centre = meet of two distinct samples), rank 3 surjective.
    """
    rank = matrix_rank([line.coords for line in lines])
    if rank == 1:
        return ConstantLine(lines[0], resolved=True)
    if rank == 2:
        distinct = list(dict.fromkeys(lines))
        return Pencil(meet(distinct[0], distinct[1]))
    return Surjective()


def _name_tag(tag: Tag, line_names: Dict[ProjLine, str], point_names: Dict[ProjPoint, str]) -> Tag:
    if isinstance(tag, ConstantLine):
        return ConstantLine(tag.line, line_names.get(tag.line), tag.resolved)
    if isinstance(tag, Pencil):
        name = point_names.get(tag.center)
        return Pencil(tag.center, f"pencil {name}" if name else None)
    return tag


def pattern_rule_222(symbol: PascalSymbol) -> str:
    """
    Predicted tag of a symbol over the (2,2,2) base from its column pattern

    Columns are pure when both letters share a block. Three pure columns give
    the surjective case; one pure column gives a pencil through that block
    (mixed columns alike) or its perspective line (mixed columns transposed);
    with no pure column a block repeated in the top row gives the chord of the
    two repeated blocks, otherwise the perspectrix ch.
    """
    columns = [(BLOCK_OF_LETTER[x], BLOCK_OF_LETTER[y]) for x, y in symbol.columns()]
    pure = [top for top, bottom in columns if top == bottom]
    if len(pure) == 3:
        return 'surjective'
    if len(pure) == 1:
        mixed = [col for col in columns if col[0] != col[1]]
        if mixed[0] == mixed[1]:
            return f"pencil {pure[0]}"
        return f"perspective {pure[0]}{pure[0]}'"
    top_counts = Counter(top for top, _ in columns)
    bottom_counts = Counter(bottom for _, bottom in columns)
    repeated_top = [name for name, n in top_counts.items() if n > 1]
    if repeated_top:
        repeated_bottom = [name for name, n in bottom_counts.items() if n > 1]
        return "chord " + "".join(sorted(repeated_top + repeated_bottom))
    return 'ch'


def base_222(P: P1Point, Q: P1Point, R: P1Point) -> Sextuple:
    return Sextuple({'A': P, 'F': P, 'B': Q, 'E': Q, 'C': R, 'D': R})


def fiber_matrix(base: Sextuple, symbol: PascalSymbol) -> Matrix3:
    """
    Linear part of the resolved map on the interior of a (2,2,2) fiber

    Returns:
        Rows are the first-order Pascal coordinates along the arcs of the three
        coordinate directions, so the value at [q1:q2:q3] is q . M when nonzero
    """
    blocks = theta(base).non_singleton_blocks()
    rows = []
    for k in range(3):
        devs = {block[1]: (UniPoly.monomial(1) if i == k else UniPoly()) for i, block in enumerate(blocks)}
        triple = arc_triple(assemble_arc(base, devs), symbol.grid, base.has_infinity())
        rows.append(tuple(p.coefficient(1) for p in triple))
    return tuple(rows)


@dataclass
class Classification222:
    """Tags of all 60 symbols over the (2,2,2) base built from P, Q, R"""
    P: P1Point
    Q: P1Point
    R: P1Point
    triangle: PolarTriangle
    entries: Dict[PascalSymbol, Tag] = field(default_factory=dict)

    def labels(self) -> Dict[PascalSymbol, str]:
        return {s: tag_label(tag) for s, tag in self.entries.items()}

    def counts(self) -> Dict[str, int]:
        return dict(sorted(Counter(self.labels().values()).items()))

    def constant_count(self) -> int:
        return sum(1 for tag in self.entries.values() if isinstance(tag, ConstantLine))

    def non_constant_count(self) -> int:
        return len(self.entries) - self.constant_count()

    def pattern_mismatches(self) -> List[Tuple[PascalSymbol, str, str]]:
        """Symbols whose sampled tag disagrees with the column-pattern rule"""
        labels = self.labels()
        return [(s, labels[s], pattern_rule_222(s)) for s in self.entries if labels[s] != pattern_rule_222(s)]

    def matches_theorem(self) -> bool:
        return self.counts() == dict(sorted(EXPECTED_222_COUNTS.items())) and not self.pattern_mismatches()

    def to_json(self) -> Dict[str, Any]:
        return {
            'P': str(self.P), 'Q': str(self.Q), 'R': str(self.R),
            'polar_triangle': self.triangle.to_dict(),
            'constant': self.constant_count(),
            'non_constant': self.non_constant_count(),
            'counts': self.counts(),
            'symbols': {str(s): tag_to_json(tag) for s, tag in self.entries.items()},
        }


def _catalog_222(triangle: PolarTriangle) -> Tuple[Dict[ProjLine, str], Dict[ProjPoint, str]]:
    vertices = {'P': triangle.P, 'Q': triangle.Q, 'R': triangle.R}
    primes = {'P': triangle.P_prime, 'Q': triangle.Q_prime, 'R': triangle.R_prime}
    lines: Dict[ProjLine, str] = {}
    for first, second in (('P', 'Q'), ('P', 'R'), ('Q', 'R')):
        lines[join(vertices[first], vertices[second])] = f"chord {first}{second}"
    for name in 'PQR':
        lines[join(vertices[name], primes[name])] = f"perspective {name}{name}'"
    lines[triangle.ch] = 'ch'
    points = {point: name for name, point in vertices.items()}
    return lines, points


class Classifier222:
    """Sampler deciding the resolved map of every symbol over a (2,2,2) base"""

    def __init__(self, samples: Optional[Sequence[Sequence[int]]] = None):
        self.samples = [tuple(q) for q in (samples or get_classification_settings()['interior_samples'])]

    def classify_symbol(self, base: Sextuple, symbol: PascalSymbol) -> Tag:
        line = eval_pascal(base, symbol)
        if line is not None:
            return ConstantLine(line)
        values = [degenerate_pascal(DegenerationSpec(base, symbol, Interior222(*q))) for q in self.samples]
        return tag_from_samples(values)

    @measure_execution_time
    def classify(self, P: P1Point, Q: P1Point, R: P1Point) -> Classification222:
        triangle = polar_triangle(P, Q, R)
        base = base_222(P, Q, R)
        line_names, point_names = _catalog_222(triangle)
        result = Classification222(P, Q, R, triangle)
        for symbol in enumerate_symbols():
            tag = self.classify_symbol(base, symbol)
            result.entries[symbol] = _name_tag(tag, line_names, point_names)
        mismatches = result.pattern_mismatches()
        if mismatches:
            safe_log(f"Pattern rule disagrees with sampling on {len(mismatches)} symbols", "WARNING")
        safe_log(f"Classified (2,2,2) base {P}, {Q}, {R}: {result.counts()}")
        return result


# Convenience function for external use
def classify_222(P: P1Point, Q: P1Point, R: P1Point) -> Classification222:
    """
    Classify the resolved Pascal maps over A = F = P, B = E = Q, C = D = R

    Args:
        P, Q, R: Pairwise distinct parameters

    Returns:
        Classification222 with one tag per symbol

    Raises:
        CoincidentElementsError: if two of P, Q, R coincide
    """
    return Classifier222().classify(P, Q, R)


@dataclass
class ClassificationCodim2:
    """Tags of all 60 symbols over a (3,1,1,1) or (2,2,1,1) base"""
    base: Sextuple
    entries: Dict[PascalSymbol, Tag] = field(default_factory=dict)
    expected_centers: Dict[PascalSymbol, ProjPoint] = field(default_factory=dict)

    @property
    def base_type(self) -> Tuple[int, ...]:
        return theta(self.base).type

    def pencils(self) -> Dict[PascalSymbol, Pencil]:
        return {s: tag for s, tag in self.entries.items() if isinstance(tag, Pencil)}

    def center_mismatches(self) -> List[PascalSymbol]:
        pencils = self.pencils()
        return [s for s, center in self.expected_centers.items()
                if s not in pencils or pencils[s].center != center]

    def all_through(self, point: ProjPoint) -> bool:
        """Every defined value, and every pencil centre, is incident with / equal to `point`"""
        for tag in self.entries.values():
            if isinstance(tag, ConstantLine) and not incident(point, tag.line):
                return False
            if isinstance(tag, Pencil) and tag.center != point:
                return False
            if isinstance(tag, Surjective):
                return False
        return True

    def to_json(self) -> Dict[str, Any]:
        return {
            'base': self.base.to_json(),
            'type': list(self.base_type),
            'pencils': len(self.pencils()),
            'symbols': {str(s): tag_to_json(tag) for s, tag in self.entries.items()},
        }


def expected_codim2_center(base: Sextuple, symbol: PascalSymbol) -> ProjPoint:
    """
    Predicted pencil centre of an undefined symbol over a codimension-two base

    For a triple block M it is M itself. For pair blocks M (two top letters)
    and N (two bottom letters) in the pattern [M M x / N N y] it is My . Nx.
    """
    partition = theta(base)
    blocks = partition.non_singleton_blocks()
    if partition.type == (3, 1, 1, 1):
        return tau(base[blocks[0][0]])
    top, bottom = symbol.grid
    block_of = {x: block for block in blocks for x in block}
    paired = [k for k in range(3) if top[k] in block_of and bottom[k] in block_of
              and block_of[top[k]] != block_of[bottom[k]]]
    lone = next(k for k in range(3) if k not in paired)
    M, N = tau(base[top[paired[0]]]), tau(base[bottom[paired[0]]])
    x, y = tau(base[top[lone]]), tau(base[bottom[lone]])
    return meet(join(M, y), join(N, x))


@measure_execution_time
def classify_codim2(h: Sextuple, samples: Optional[Sequence[Any]] = None) -> ClassificationCodim2:
    """
    Classify the resolved Pascal maps over a (3,1,1,1) or (2,2,1,1) base

    Args:
        h: Base sextuple
        samples: Fiber parameters p of [1 : p] (defaults from settings)

    Returns:
        ClassificationCodim2 with predicted pencil centres alongside

    Raises:
        DegenerationSpecError: for any other base type
    """
    partition = theta(h)
    if partition.type not in CODIM2_TYPES:
        raise DegenerationSpecError(f"Base type {partition.type} is not a codimension-two coincidence")
    params = [parse_rational(p) if isinstance(p, str) else Fraction(p)
              for p in (samples or get_classification_settings()['codim2_samples'])]
    result = ClassificationCodim2(h)
    for symbol in enumerate_symbols():
        line = eval_pascal(h, symbol)
        if line is not None:
            result.entries[symbol] = ConstantLine(line)
            continue
        values = [degenerate_pascal(DegenerationSpec(h, symbol, Codim2(1, p))) for p in params]
        result.entries[symbol] = tag_from_samples(values)
        result.expected_centers[symbol] = expected_codim2_center(h, symbol)
    safe_log(f"Classified codim-2 base {partition}: {len(result.pencils())} pencils")
    return result
