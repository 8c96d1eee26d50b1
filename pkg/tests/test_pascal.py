from fractions import Fraction

from hypothesis import given, settings

from core.pascal import (all_pascals, crosshair_pascal, crosshair_points, eval_pascal, pascal_coordinates,
                         pascal_formula, pascals_pairwise_distinct, symbol_binding)
from core.projgeom import Mobius, ProjLine, incident, induced_plane_map, join, tau, transform_line
from core.sextuple import Sextuple, is_indeterminate
from core.symbols import PascalSymbol, enumerate_symbols, parse_grid
from tests.strategies import mobius_entries, sextuples, sextuples_with_infinity

BASE = PascalSymbol("ABC/FED")


def test_binding_of_base_grid():
    assert symbol_binding(parse_grid("ABC/FED")) == {'a': 'A', 'b': 'B', 'c': 'C', 'f': 'F', 'e': 'E', 'd': 'D'}


def test_pascal_with_a_double_point():
    h = Sextuple.from_values([0, 0, 1, 2, 3, 5])
    assert pascal_coordinates(h, BASE) == (0, -4, 2)
    assert eval_pascal(h, BASE) == ProjLine(0, 2, -1)
    # A = B: the Pascal is the chord AD, and the tangent at A stands in for AB
    assert eval_pascal(h, BASE) == join(tau(h['A']), tau(h['D']))
    assert crosshair_pascal(h, BASE) == ProjLine(0, 2, -1)


def test_undefined_on_indeterminacy():
    h = Sextuple.from_values([1, 2, 3, 3, 2, 1])
    assert eval_pascal(h, BASE) is None
    assert pascal_coordinates(h, BASE) == (0, 0, 0)
    undefined = [s for s, line in all_pascals(h).items() if line is None]
    assert undefined == [s for s in enumerate_symbols() if is_indeterminate(h, s)]


@given(h=sextuples_with_infinity)
@settings(max_examples=25, deadline=None)
def test_formula_matches_crosshair_construction(h: Sextuple):
    for symbol in enumerate_symbols():
        line = eval_pascal(h, symbol)
        assert line is not None
        assert line == crosshair_pascal(h, symbol)
        assert all(incident(point, line) for point in crosshair_points(h, symbol))


@given(h=sextuples)
@settings(max_examples=10, deadline=None)
def test_representatives_agree(h: Sextuple):
    for symbol in enumerate_symbols():
        lines = {eval_pascal(h, symbol, grid) for grid in symbol.representatives()}
        assert len(lines) == 1


@given(h=sextuples_with_infinity, entries=mobius_entries)
@settings(max_examples=15, deadline=None)
def test_mobius_equivariance(h: Sextuple, entries):
    m = Mobius(*entries)
    matrix = induced_plane_map(m)
    image = h.map_points(m.apply)
    for symbol in enumerate_symbols():
        assert eval_pascal(image, symbol) == transform_line(matrix, eval_pascal(h, symbol))


@given(h=sextuples_with_infinity)
@settings(max_examples=15, deadline=None)
def test_sixty_distinct_pascals(h: Sextuple):
    assert pascals_pairwise_distinct(list(all_pascals(h).values()))


def test_formula_reduces_to_affine_coordinates():
    formula = pascal_formula()
    values = dict(zip('abcdef', (Fraction(1, 2), 3, -1, 4, Fraction(2, 3), 7)))
    pairs = {var: (1, value) for var, value in values.items()}
    homogeneous = [u.evaluate({f"{v}{i}": pairs[v][i] for v in pairs for i in (0, 1)})
                   for u in formula.homogenized()]
    affine = [u.evaluate(values) for u in formula.polynomials()]
    assert homogeneous == affine


def test_pairwise_distinct_needs_defined_lines():
    assert not pascals_pairwise_distinct([ProjLine(1, 0, 0), None])
    assert not pascals_pairwise_distinct([ProjLine(1, 0, 0), ProjLine(2, 0, 0)])
    assert pascals_pairwise_distinct([ProjLine(1, 0, 0), ProjLine(0, 1, 0)])
