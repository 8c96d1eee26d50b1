#!/usr/bin/env python3
"""
Sextuples of conic parameters and their coincidence partitions
Letters A-F, set partitions with refinement, polydiagonals, the open locus H° and tri-symmetry detection
"""

import random
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from core.errors import GeometryError, ParseError
from core.projgeom import Mobius, P1Point
from core.wire import format_rational, parse_parameter
from utils.helpers import random_distinct_rationals, safe_log

LETTERS = ('A', 'B', 'C', 'D', 'E', 'F')

# Coincidence types allowed on the open locus H°
H_CIRC_TYPES = frozenset({
    (1, 1, 1, 1, 1, 1),
    (2, 1, 1, 1, 1),
    (2, 2, 1, 1),
    (3, 1, 1, 1),
    (2, 2, 2),
})


class Partition:
    """
    A set partition of the six letters

    Blocks are stored as sorted letter tuples, ordered by their first letter,
    so two equal partitions always have the same representation.
    """

    __slots__ = ('blocks',)

    def __init__(self, blocks: Iterable[Iterable[str]]):
        normalized = [tuple(sorted(block)) for block in blocks]
        letters = [x for block in normalized for x in block]
        if any(not block for block in normalized):
            raise ValueError("Partition blocks must be nonempty")
        if sorted(letters) != list(LETTERS):
            raise ValueError(f"Partition blocks must cover A-F exactly once: {normalized}")
        self.blocks: Tuple[Tuple[str, ...], ...] = tuple(sorted(normalized))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[str]]) -> 'Partition':
        """Build from the non-singleton blocks; missing letters become singletons"""
        given = [tuple(block) for block in blocks]
        used = {x for block in given for x in block}
        return cls(given + [(x,) for x in LETTERS if x not in used])

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Parse the dotted form "AF.BE.CD" (singletons may be omitted)"""
        blocks = [part.strip().upper() for part in text.split('.') if part.strip()]
        try:
            return cls.from_blocks(blocks)
        except ValueError as e:
            raise ParseError(f"Malformed partition {text!r}: {e}") from e

    @classmethod
    def trivial(cls) -> 'Partition':
        return cls((x,) for x in LETTERS)

    @property
    def type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(block) for block in self.blocks), reverse=True))

    def block_of(self, letter: str) -> Tuple[str, ...]:
        return next(block for block in self.blocks if letter in block)

    def non_singleton_blocks(self) -> List[Tuple[str, ...]]:
        return [block for block in self.blocks if len(block) > 1]

    def is_trivial(self) -> bool:
        return all(len(block) == 1 for block in self.blocks)

    def refines(self, other: 'Partition') -> bool:
        """True if every block of self lies inside a block of other"""
        return all(set(block) <= set(other.block_of(block[0])) for block in self.blocks)

    def relabel(self, mapping: Mapping[str, str]) -> 'Partition':
        return Partition([mapping[x] for x in block] for block in self.blocks)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __lt__(self, other: 'Partition') -> bool:
        return self.blocks < other.blocks

    def __str__(self) -> str:
        return ".".join("".join(block) for block in self.blocks)

    def __repr__(self) -> str:
        return f"Partition('{self}')"


def all_partitions() -> List[Partition]:
    """The 203 set partitions of the six letters"""
    def grow(remaining: Sequence[str]) -> Iterator[List[List[str]]]:
        if not remaining:
            yield []
            return
        first, rest = remaining[0], remaining[1:]
        for smaller in grow(rest):
            yield [[first]] + smaller
            for i in range(len(smaller)):
                yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]

    return sorted(Partition(blocks) for blocks in grow(LETTERS))


def refines(p1: Partition, p2: Partition) -> bool:
    """p1 is finer than (or equal to) p2"""
    return p1.refines(p2)


ParameterLike = Union[P1Point, Fraction, int, None]


def _as_p1(value: ParameterLike) -> P1Point:
    if isinstance(value, P1Point):
        return value
    return P1Point.from_value(value)


class Sextuple:
    """A map from the letters A-F to parameters on the projective line"""

    __slots__ = ('_points',)

    def __init__(self, assignment: Mapping[str, ParameterLike]):
        missing = [x for x in LETTERS if x not in assignment]
        extra = [x for x in assignment if x not in LETTERS]
        if missing or extra:
            raise ParseError(f"Sextuple needs exactly the letters A-F (missing {missing}, unexpected {extra})")
        self._points: Dict[str, P1Point] = {x: _as_p1(assignment[x]) for x in LETTERS}

    @classmethod
    def from_values(cls, values: Sequence[ParameterLike]) -> 'Sextuple':
        """Parameters for A..F in order; None means infinity"""
        if len(values) != 6:
            raise ParseError(f"Sextuple needs six values, got {len(values)}")
        return cls(dict(zip(LETTERS, values)))

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> 'Sextuple':
        """Parse {"A": "3", ..., "F": "inf"}"""
        if not isinstance(payload, Mapping):
            raise ParseError("Sextuple JSON must be an object keyed by letters A-F")
        return cls({str(k).upper(): parse_parameter(v) for k, v in payload.items()})

    def to_json(self) -> Dict[str, str]:
        return {x: format_rational(self._points[x].value) for x in LETTERS}

    def __getitem__(self, letter: str) -> P1Point:
        return self._points[letter]

    def items(self) -> List[Tuple[str, P1Point]]:
        return [(x, self._points[x]) for x in LETTERS]

    def points(self) -> List[P1Point]:
        return [self._points[x] for x in LETTERS]

    def map_points(self, func: Callable[[P1Point], P1Point]) -> 'Sextuple':
        return Sextuple({x: func(p) for x, p in self._points.items()})

    def relabel(self, mapping: Mapping[str, str]) -> 'Sextuple':
        """The sextuple sigma.h with (sigma.h)(sigma(x)) = h(x)"""
        return Sextuple({mapping[x]: p for x, p in self._points.items()})

    def has_infinity(self) -> bool:
        return any(p.is_infinity for p in self._points.values())

    def is_injective(self) -> bool:
        return len(set(self._points.values())) == 6

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Sextuple):
            return NotImplemented
        return self._points == other._points

    def __hash__(self) -> int:
        return hash(tuple(self.points()))

    def __repr__(self) -> str:
        return "Sextuple(" + ", ".join(f"{x}={p}" for x, p in self.items()) + ")"


def theta(h: Sextuple) -> Partition:
    """Coincidence partition: letters share a block iff they map to the same point"""
    groups: Dict[P1Point, List[str]] = {}
    for letter, point in h.items():
        groups.setdefault(point, []).append(letter)
    return Partition(groups.values())


def in_polydiagonal(h: Sextuple, pi: Partition) -> bool:
    """h is constant on every block of pi, i.e. pi refines theta(h)"""
    return pi.refines(theta(h))


def in_H_circ(h: Sextuple) -> bool:
    return theta(h).type in H_CIRC_TYPES


def is_indeterminate(h: Sextuple, s: Any) -> bool:
    """
    Whether the Pascal of symbol s is undefined at h

    Decided combinatorially: h lies on one of the six indeterminacy polydiagonals of s.
    """
    from core.symbols import indeterminacy_partitions

    coincidences = theta(h)
    return any(pi.refines(coincidences) for pi in indeterminacy_partitions(s))


def tri_symmetric(h: Sextuple) -> Optional[Fraction]:
    """
    Look for a rational witness that h is projectively {0, 1, inf, a, (a-1)/a, 1/(1-a)}

    Args:
        h: Sextuple with six distinct points

    Returns:
        A witness a, or None if no rational witness exists

    Raises:
        GeometryError: if two letters share a point
    """
    if not h.is_injective():
        raise GeometryError("tri_symmetric needs six distinct points")
    points = h.points()
    for chosen in permutations(range(6), 3):
        mobius = Mobius.sending_to_standard(*(points[i] for i in chosen))
        rest = [mobius.apply(points[i]).value for i in range(6) if i not in chosen]
        for b1, b2, b3 in permutations(rest):
            # distinct from 0, 1, inf because the map is injective
            if b2 == (b1 - 1) / b1 and b3 == 1 / (1 - b1):
                safe_log(f"Tri-symmetric witness {b1} for {h}", "DEBUG")
                return b1
    return None


# Sampling

def random_sextuple(rng: random.Random, numerator_bound: int = 50, denominator_bound: int = 12) -> Sextuple:
    """Injective sextuple of finite rational parameters"""
    return Sextuple.from_values(random_distinct_rationals(rng, 6, numerator_bound, denominator_bound))


def random_on_polydiagonal(rng: random.Random, pi: Partition, numerator_bound: int = 50,
                           denominator_bound: int = 12) -> Sextuple:
    """Sextuple constant on the blocks of pi with distinct values on distinct blocks"""
    values = random_distinct_rationals(rng, len(pi.blocks), numerator_bound, denominator_bound)
    return Sextuple({x: value for block, value in zip(pi.blocks, values) for x in block})
