#!/usr/bin/env python3
"""
Degenerate Pascals on blow-up fibers
Fiber points, degeneration specs and evaluation of the resolved Pascal map as a t-adic limit along polynomial arcs
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from core.errors import DegenerationSpecError, IndeterminateLimitError, ParseError
from core.exactalg import UniPoly, substitute, t_strip
from core.pascal import evaluate_multiaffine, pascal_formula, symbol_binding
from core.projgeom import ProjLine
from core.sextuple import LETTERS, Partition, Sextuple, in_H_circ, is_indeterminate, theta
from core.symbols import Grid, PascalSymbol, enumerate_symbols
from core.wire import format_rational, parse_rational
from utils.helpers import random_distinct_rationals, random_nonzero_rational, safe_log

CODIM2_TYPES = ((3, 1, 1, 1), (2, 2, 1, 1))
TYPE_222 = (2, 2, 2)

Arc = Dict[str, Tuple[UniPoly, UniPoly]]

T = UniPoly.monomial(1)
T2 = UniPoly.monomial(2)


def _nonzero(values: Sequence[Fraction], what: str):
    if not any(values):
        raise DegenerationSpecError(f"{what} coordinates must not all vanish")


@dataclass(frozen=True)
class Codim2:
    """Point [p0 : p1] of the P^1 fiber over a (3,1,1,1) or (2,2,1,1) polydiagonal"""
    p0: Fraction
    p1: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'p0', Fraction(self.p0))
        object.__setattr__(self, 'p1', Fraction(self.p1))
        _nonzero((self.p0, self.p1), "Codim2 fiber")

    kind = 'codim2'

    def coords(self) -> Tuple[Fraction, ...]:
        return self.p0, self.p1


@dataclass(frozen=True)
class Interior222:
    """Point [q1 : q2 : q3] of the P^2 fiber over a (2,2,2) polydiagonal, away from the marked points"""
    q1: Fraction
    q2: Fraction
    q3: Fraction

    def __post_init__(self):
        for name in ('q1', 'q2', 'q3'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        _nonzero(self.coords(), "Interior222 fiber")
        if sum(1 for q in self.coords() if q) == 1:
            raise DegenerationSpecError(
                f"Fiber point [{':'.join(format_rational(q) for q in self.coords())}] is a marked point; "
                "use L-line coordinates")

    kind = 'interior222'

    def coords(self) -> Tuple[Fraction, ...]:
        return self.q1, self.q2, self.q3


def normalize_marked(marked: str) -> str:
    """Canonical "XY.ZW" name of a marked point (two pair blocks, sorted)"""
    blocks = sorted("".join(sorted(part.strip().upper())) for part in marked.split('.') if part.strip())
    if len(blocks) != 2 or any(len(block) != 2 for block in blocks):
        raise DegenerationSpecError(f"Marked point must name two letter pairs like 'AF.BE', got {marked!r}")
    return ".".join(blocks)


@dataclass(frozen=True)
class LLine222:
    """Point [r0 : r1] of the exceptional line over the marked point where the blocks in `marked` stay merged"""
    marked: str
    r0: Fraction
    r1: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'marked', normalize_marked(self.marked))
        object.__setattr__(self, 'r0', Fraction(self.r0))
        object.__setattr__(self, 'r1', Fraction(self.r1))
        _nonzero((self.r0, self.r1), "LLine222 fiber")

    kind = 'lline222'

    def coords(self) -> Tuple[Fraction, ...]:
        return self.r0, self.r1


FiberPoint = Union[Codim2, Interior222, LLine222]


def scale_fiber(fiber: FiberPoint, factor: Fraction) -> FiberPoint:
    """Same fiber point with rescaled homogeneous coordinates"""
    scaled = [factor * x for x in fiber.coords()]
    if isinstance(fiber, LLine222):
        return LLine222(fiber.marked, *scaled)
    return type(fiber)(*scaled)


def fiber_from_json(payload: Mapping[str, Any]) -> FiberPoint:
    """
    Parse {"kind": "codim2" | "interior222" | "lline222", "coords": [...], "marked": "AF.BE"}

    Raises:
        ParseError: on a malformed object
        DegenerationSpecError: on an invalid fiber point
    """
    if not isinstance(payload, Mapping):
        raise ParseError("Fiber must be a JSON object")
    kind = str(payload.get('kind', '')).lower()
    coords = [parse_rational(x) for x in payload.get('coords', [])]
    expected = {'codim2': 2, 'interior222': 3, 'lline222': 2}
    if kind not in expected:
        raise ParseError(f"Unknown fiber kind {kind!r}")
    if len(coords) != expected[kind]:
        raise ParseError(f"Fiber kind {kind} needs {expected[kind]} coordinates, got {len(coords)}")
    if kind == 'codim2':
        return Codim2(*coords)
    if kind == 'interior222':
        return Interior222(*coords)
    if 'marked' not in payload:
        raise ParseError("lline222 fiber needs a 'marked' point name")
    return LLine222(str(payload['marked']), *coords)


def fiber_to_json(fiber: FiberPoint) -> Dict[str, Any]:
    payload: Dict[str, Any] = {'kind': fiber.kind, 'coords': [format_rational(x) for x in fiber.coords()]}
    if isinstance(fiber, LLine222):
        payload['marked'] = fiber.marked
    return payload


@dataclass(frozen=True)
class DegenerationSpec:
    """A degenerate base sextuple, a symbol undefined there, and a point of the blow-up fiber over it"""
    base: Sextuple
    symbol: PascalSymbol
    fiber: FiberPoint

    @property
    def partition(self) -> Partition:
        return theta(self.base)

    def validate(self) -> 'DegenerationSpec':
        """
        Check that base, symbol and fiber point fit together

        Returns:
            self, for chaining

        Raises:
            DegenerationSpecError: naming the violated condition
        """
        partition = self.partition
        if not in_H_circ(self.base) or partition.type not in CODIM2_TYPES + (TYPE_222,):
            raise DegenerationSpecError(
                f"Base coincidence {partition} of type {partition.type} has no blow-up fiber model")
        if not is_indeterminate(self.base, self.symbol):
            raise DegenerationSpecError(f"Pascal {self.symbol} is already defined at the base")
        if partition.type in CODIM2_TYPES:
            if not isinstance(self.fiber, Codim2):
                raise DegenerationSpecError(f"Base type {partition.type} needs a codim2 fiber point")
        elif isinstance(self.fiber, LLine222):
            blocks = {"".join(b) for b in partition.non_singleton_blocks()}
            if not set(self.fiber.marked.split('.')) <= blocks:
                raise DegenerationSpecError(
                    f"Marked point {self.fiber.marked} does not name two blocks of {partition}")
        elif not isinstance(self.fiber, Interior222):
            raise DegenerationSpecError("Base type (2,2,2) needs an interior222 or lline222 fiber point")
        return self

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> 'DegenerationSpec':
        if not isinstance(payload, Mapping) or not {'base', 'symbol', 'fiber'} <= set(payload):
            raise ParseError("Degeneration spec needs 'base', 'symbol' and 'fiber'")
        return cls(Sextuple.from_json(payload['base']), PascalSymbol(str(payload['symbol'])),
                   fiber_from_json(payload['fiber']))

    def to_json(self) -> Dict[str, Any]:
        return {'base': self.base.to_json(), 'symbol': str(self.symbol), 'fiber': fiber_to_json(self.fiber)}


def deviations(spec: DegenerationSpec) -> Dict[str, UniPoly]:
    """
    Deviation of each non-anchor letter from its block anchor along the arc

    The anchor of a block is its alphabetically first letter. Codim2 fibers
    assign p0*t, p1*t to the non-anchor letters in alphabetical order;
    interior fibers assign q1*t, q2*t, q3*t to the blocks in anchor order;
    L-line fibers give the two merged blocks r0*t^2, r1*t^2 and the third t.
    """
    blocks = spec.partition.non_singleton_blocks()
    fiber = spec.fiber
    if isinstance(fiber, Codim2):
        movers = sorted(x for block in blocks for x in block[1:])
        return {movers[0]: fiber.p0 * T, movers[1]: fiber.p1 * T}
    if isinstance(fiber, Interior222):
        return {block[1]: q * T for block, q in zip(blocks, fiber.coords())}
    merged = fiber.marked.split('.')
    result: Dict[str, UniPoly] = {}
    r_values = iter(fiber.coords())
    for block in blocks:
        name = "".join(block)
        result[block[1]] = next(r_values) * T2 if name in merged else T
    return result


def assemble_arc(base: Sextuple, devs: Mapping[str, UniPoly],
                 perturbation: Optional[Mapping[str, UniPoly]] = None) -> Arc:
    """
    Homogeneous arc [x0(t) : x1(t)] for each letter

    A finite letter with base value v moves as v + deviation. A letter whose
    block sits at infinity moves in the local coordinate 1/x, so its arc is
    [deviation : 1].
    """
    perturbation = perturbation or {}
    arc: Arc = {}
    for letter in LETTERS:
        shift = devs.get(letter, UniPoly()) + perturbation.get(letter, UniPoly())
        point = base[letter]
        if point.is_infinity:
            arc[letter] = (shift, UniPoly.constant(1))
        else:
            arc[letter] = (UniPoly.constant(1), shift + point.value)
    return arc


def build_arc(spec: DegenerationSpec, perturbation: Optional[Mapping[str, UniPoly]] = None) -> Arc:
    return assemble_arc(spec.base, deviations(spec), perturbation)


def arc_triple(arc: Arc, grid: Grid, homogeneous: bool) -> List[UniPoly]:
    """Pascal coordinates along an arc, as polynomials in t"""
    binding = symbol_binding(grid)
    formula = pascal_formula()
    if homogeneous:
        pairs = {var: arc[letter] for var, letter in binding.items()}
        return [evaluate_multiaffine(terms, pairs) for terms in formula.terms]
    bindings = {var: arc[letter][1] for var, letter in binding.items()}
    return [substitute(u, bindings) for u in formula.polynomials()]


def limit_along_arc(spec: DegenerationSpec, perturbation: Optional[Mapping[str, UniPoly]] = None,
                    grid: Optional[Grid] = None, homogeneous: Optional[bool] = None) -> Tuple[int, ProjLine]:
    """
    Limit of the Pascal line along the arc of a spec

    Args:
        spec: Degeneration spec (validated here)
        perturbation: Extra terms added to letter deviations
        grid: Representative grid of the symbol (defaults to the canonical one)
        homogeneous: Force the homogeneous evaluation; bases at infinity always use it

    Returns:
        (valuation, limit line)

    Raises:
        DegenerationSpecError: for an invalid spec
        IndeterminateLimitError: if the arc lies inside the indeterminacy locus
    """
    spec.validate()
    use_homogeneous = spec.base.has_infinity() or bool(homogeneous)
    arc = build_arc(spec, perturbation)
    triple = arc_triple(arc, grid or spec.symbol.grid, use_homogeneous)
    try:
        valuation, limit = t_strip(triple)
    except IndeterminateLimitError:
        safe_log(f"Arc inside indeterminacy for {spec.symbol} at {spec.base}", "ERROR")
        raise
    return valuation, ProjLine(limit)


def degenerate_pascal(spec: DegenerationSpec) -> ProjLine:
    """
    Value of the resolved Pascal map at a fiber point

    Args:
        spec: Base sextuple, symbol undefined there, fiber point

    Returns:
        The limit line along an arc lifting to the fiber point
    """
    return limit_along_arc(spec)[1]


# Random specs

def indeterminate_symbols(base: Sextuple) -> List[PascalSymbol]:
    return [s for s in enumerate_symbols() if is_indeterminate(base, s)]


def random_base(rng: random.Random, base_type: Tuple[int, ...], numerator_bound: int = 50,
                denominator_bound: int = 12) -> Sextuple:
    """Random sextuple whose coincidence partition has the given type"""
    letters = list(LETTERS)
    rng.shuffle(letters)
    blocks: List[List[str]] = []
    for size in base_type:
        blocks.append(letters[:size])
        letters = letters[size:]
    values = random_distinct_rationals(rng, len(blocks), numerator_bound, denominator_bound)
    return Sextuple({x: value for block, value in zip(blocks, values) for x in block})


def random_fiber(rng: random.Random, base: Sextuple, lline: bool = False) -> FiberPoint:
    partition = theta(base)
    if partition.type in CODIM2_TYPES:
        return Codim2(random_nonzero_rational(rng, 9, 4), rng.randint(-9, 9))
    if lline:
        blocks = ["".join(b) for b in partition.non_singleton_blocks()]
        merged = rng.sample(blocks, 2)
        return LLine222(".".join(merged), random_nonzero_rational(rng, 9, 4), rng.randint(-9, 9))
    while True:
        coords = [rng.randint(-9, 9) for _ in range(3)]
        if sum(1 for q in coords if q) >= 2:
            return Interior222(*coords)


def random_degeneration_spec(rng: random.Random, base_type: Tuple[int, ...], lline: bool = False) -> DegenerationSpec:
    """Random valid spec over a base of the given type"""
    base = random_base(rng, base_type)
    symbol = rng.choice(indeterminate_symbols(base))
    return DegenerationSpec(base, symbol, random_fiber(rng, base, lline)).validate()
