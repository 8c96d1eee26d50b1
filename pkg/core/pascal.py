#!/usr/bin/env python3
"""
Pascal line evaluation
Closed-form Pascal coordinates, their multihomogeneous form, and the cross-hair construction with the tangent convention
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from core.errors import CoincidentElementsError
from core.exactalg import MultiPoly
from core.projgeom import ProjLine, ProjPoint, chord, incident, join, meet
from core.sextuple import Sextuple
from core.symbols import Grid, PascalSymbol, enumerate_symbols
from utils.helpers import safe_log

# Formula variables, in the order the symbol grid binds them
FORMULA_VARIABLES = ('a', 'b', 'c', 'd', 'e', 'f')

Support = FrozenSet[str]
MultiaffineTerms = Tuple[Tuple[int, Support], ...]


def symbol_binding(grid: Grid) -> Dict[str, str]:
    """
    Letter bound to each formula variable

    The base formula describes [ABC/FED]: the top row binds a, b, c and the
    bottom row binds f, e, d from left to right.
    """
    top, bottom = grid
    return {'a': top[0], 'b': top[1], 'c': top[2], 'f': bottom[0], 'e': bottom[1], 'd': bottom[2]}


@dataclass(frozen=True)
class PascalFormula:
    """Coordinates <u0 : u1 : u2> of the Pascal [ABC/FED] as polynomials in the parameters a..f"""
    u0: MultiPoly
    u1: MultiPoly
    u2: MultiPoly
    terms: Tuple[MultiaffineTerms, ...] = field(repr=False, compare=False, default=())

    def polynomials(self) -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
        return self.u0, self.u1, self.u2

    def homogenized(self) -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
        """
        U_i in the variables a0, a1, ..., f0, f1 (letter x has parameter [x0 : x1])

        Each u_i is affine in every letter, so U_i is of degree one in each pair
        and setting every x0 = 1, x1 = x gives back u_i.
        """
        result = []
        for terms in self.terms:
            poly = MultiPoly()
            for coeff, support in terms:
                monomial = tuple((f"{v}{1 if v in support else 0}", 1) for v in FORMULA_VARIABLES)
                poly = poly + MultiPoly({monomial: coeff})
            result.append(poly)
        return tuple(result)


def _multiaffine_terms(poly: MultiPoly) -> MultiaffineTerms:
    terms = []
    for monomial, coeff in poly.terms.items():
        if any(exp != 1 for _, exp in monomial) or coeff.denominator != 1:
            raise ValueError(f"Pascal coordinate is not multi-affine with integer coefficients: {poly}")
        terms.append((int(coeff), frozenset(name for name, _ in monomial)))
    return tuple(sorted(terms, key=lambda item: (sorted(item[1]), item[0])))


@lru_cache(maxsize=1)
def pascal_formula() -> PascalFormula:
    """
    The Pascal coordinates of [ABC/FED]

    Returns:
        PascalFormula with
        u0 = abde - abdf - acde + acef + bcdf - bcef,
        u1 = -abe + abf + acd - acf + adf - aef - bcd + bce - bde + bef + cde - cdf,
        u2 = -ad + ae + bd - bf - ce + cf
    """
    a, b, c, d, e, f = MultiPoly.variables('a b c d e f')
    u0 = a*b*d*e - a*b*d*f - a*c*d*e + a*c*e*f + b*c*d*f - b*c*e*f
    u1 = (-a*b*e + a*b*f + a*c*d - a*c*f + a*d*f - a*e*f
          - b*c*d + b*c*e - b*d*e + b*e*f + c*d*e - c*d*f)
    u2 = -a*d + a*e + b*d - b*f - c*e + c*f
    terms = tuple(_multiaffine_terms(u) for u in (u0, u1, u2))
    return PascalFormula(u0, u1, u2, terms)


def evaluate_multiaffine(terms: MultiaffineTerms, pairs: Mapping[str, Tuple[Any, Any]]) -> Any:
    """
    Evaluate a homogenized coordinate at homogeneous parameters

    Args:
        terms: (coefficient, support) pairs of a multi-affine polynomial
        pairs: Formula variable -> (x0, x1) in any commutative ring

    Returns:
        Sum of coefficient * prod(x1 over the support) * prod(x0 elsewhere)
    """
    total: Any = 0
    for coeff, support in terms:
        value: Any = coeff
        for var in FORMULA_VARIABLES:
            x0, x1 = pairs[var]
            value = value * (x1 if var in support else x0)
        total = total + value
    return total


def pascal_coordinates(h: Sextuple, s: PascalSymbol, grid: Optional[Grid] = None) -> Tuple[int, int, int]:
    """
    Raw homogeneous Pascal coordinates (U0, U1, U2) of symbol s at h

    Args:
        h: Sextuple
        s: Pascal symbol
        grid: Representative grid of s to bind the formula with (defaults to the canonical grid)

    Returns:
        Integer triple, zero exactly when the Pascal is undefined
    """
    binding = symbol_binding(grid or s.grid)
    pairs = {var: h[letter].coords for var, letter in binding.items()}
    return tuple(evaluate_multiaffine(terms, pairs) for terms in pascal_formula().terms)


def eval_pascal(h: Sextuple, s: PascalSymbol, grid: Optional[Grid] = None) -> Optional[ProjLine]:
    """
    Pascal line of symbol s at h, or None where it is undefined

    Args:
        h: Sextuple (parameters may be infinite)
        s: Pascal symbol
        grid: Optional representative grid of s

    Returns:
        The canonical line, None on the indeterminacy locus of s
    """
    coords = pascal_coordinates(h, s, grid)
    if not any(coords):
        return None
    return ProjLine(coords)


def crosshair_points(h: Sextuple, s: PascalSymbol) -> List[Optional[ProjPoint]]:
    """
    The three cross-hair points of the grid [x1 x2 x3 / y1 y2 y3]

    Point k is the meet of x_i y_j and x_j y_i for the column pair (i, j); the
    line through two equal parameters is the tangent there. A point is None
    when its two lines coincide.
    """
    top, bottom = s.grid
    points: List[Optional[ProjPoint]] = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        first = chord(h[top[i]], h[bottom[j]])
        second = chord(h[top[j]], h[bottom[i]])
        try:
            points.append(meet(first, second))
        except CoincidentElementsError:
            points.append(None)
    return points


def crosshair_pascal(h: Sextuple, s: PascalSymbol) -> Optional[ProjLine]:
    """
    Pascal line by the geometric construction

    Returns:
        The line through the defined cross-hair points when at least two of them
        are distinct and all are collinear; None otherwise
    """
    defined = list(dict.fromkeys(p for p in crosshair_points(h, s) if p is not None))
    if len(defined) < 2:
        return None
    line = join(defined[0], defined[1])
    if not all(incident(p, line) for p in defined[2:]):
        safe_log(f"Cross-hair points of {s} not collinear at {h}", "WARNING")
        return None
    return line


def all_pascals(h: Sextuple) -> Dict[PascalSymbol, Optional[ProjLine]]:
    """The 60 Pascals of h keyed by symbol (None where undefined)"""
    return {s: eval_pascal(h, s) for s in enumerate_symbols()}


def pascals_pairwise_distinct(lines: Sequence[Optional[ProjLine]]) -> bool:
    """True when every line is defined and no two coincide"""
    return all(line is not None for line in lines) and len(set(lines)) == len(lines)
