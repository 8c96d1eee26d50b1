from fractions import Fraction

import pytest
from hypothesis import assume, given

from core.errors import CoincidentElementsError, GeometryError
from core.projgeom import (Mobius, P1Point, ProjLine, ProjPoint, canonical_form, chord, incident,
                           induced_plane_map, join, meet, on_conic, polar, polar_triangle, pole, tangent_at, tau,
                           transform_line, transform_point)
from tests.strategies import mobius_entries, parameters


def test_canonical_form():
    assert canonical_form((2, -4, 6)) == (1, -2, 3)
    assert canonical_form((0, -3, 6)) == (0, 1, -2)
    assert canonical_form((Fraction(1, 2), Fraction(1, 3), 0)) == (3, 2, 0)
    with pytest.raises(GeometryError):
        canonical_form((0, 0, 0))


def test_equal_up_to_scale():
    assert ProjPoint(1, 2, 3) == ProjPoint(-2, -4, -6)
    assert ProjLine(1, 2, 3) != ProjPoint(1, 2, 3)


def test_p1_values():
    assert P1Point.from_value(Fraction(3, 2)).coords == (2, 3)
    assert P1Point.from_value(None) == P1Point.infinity()
    assert P1Point.infinity().value is None
    assert str(P1Point.from_value(Fraction(-1, 3))) == "-1/3"
    assert str(P1Point.infinity()) == "inf"


@given(p=parameters)
def test_tau_lands_on_conic(p: P1Point):
    point = tau(p)
    assert on_conic(point)
    assert incident(point, tangent_at(p))
    assert polar(point) == tangent_at(p)


@given(p=parameters, q=parameters)
def test_chord_passes_through_both_points(p: P1Point, q: P1Point):
    line = chord(p, q)
    assert incident(tau(p), line)
    assert incident(tau(q), line)


@given(p=parameters, q=parameters, r=parameters)
def test_join_meet_duality(p: P1Point, q: P1Point, r: P1Point):
    assume(len({p, q, r}) == 3)
    first, second = join(tau(p), tau(q)), join(tau(p), tau(r))
    assert meet(first, second) == tau(p)
    assert pole(polar(tau(q))) == tau(q)


def test_coincident_elements():
    point = ProjPoint(1, 0, 0)
    with pytest.raises(CoincidentElementsError, match="coincident elements"):
        join(point, point)
    with pytest.raises(CoincidentElementsError):
        meet(ProjLine(0, 1, 0), ProjLine(0, 2, 0))


def test_polar_triangle_of_normalized_triple():
    triangle = polar_triangle(P1Point.from_value(1), P1Point.from_value(0), P1Point.from_value(-1))
    assert triangle.P_prime == ProjPoint(2, -1, 0)
    assert triangle.CH == ProjPoint(3, 0, 1)
    assert triangle.ch == ProjLine(1, 0, 3)


@given(p=parameters, q=parameters, r=parameters)
def test_polar_triangle_perspectivity(p: P1Point, q: P1Point, r: P1Point):
    assume(len({p, q, r}) == 3)
    triangle = polar_triangle(p, q, r)
    for vertex, prime in ((triangle.P, triangle.P_prime), (triangle.Q, triangle.Q_prime),
                          (triangle.R, triangle.R_prime)):
        assert incident(triangle.CH, join(vertex, prime))
    assert not incident(triangle.CH, triangle.ch)


def test_polar_triangle_needs_distinct_points():
    with pytest.raises(CoincidentElementsError):
        polar_triangle(P1Point.from_value(1), P1Point.from_value(1), P1Point.from_value(2))


def test_sending_to_standard():
    p, q, r = (P1Point.from_value(v) for v in (Fraction(2), Fraction(-1, 3), None))
    m = Mobius.sending_to_standard(p, q, r)
    assert m(p) == P1Point.from_value(0)
    assert m(q) == P1Point.from_value(1)
    assert m(r) == P1Point.infinity()


def test_mobius_needs_nonzero_determinant():
    with pytest.raises(GeometryError):
        Mobius(1, 2, 2, 4)


@given(entries=mobius_entries, p=parameters)
def test_mobius_inverse_and_compose(entries, p: P1Point):
    m = Mobius(*entries)
    assert m.inverse()(m(p)) == p
    assert m.compose(m.inverse()) == Mobius.identity()
    assert (m @ m)(p) == m(m(p))


@given(entries=mobius_entries, p=parameters, q=parameters)
def test_induced_map_preserves_conic_and_incidence(entries, p: P1Point, q: P1Point):
    assume(p != q)
    m = Mobius(*entries)
    matrix = induced_plane_map(m)
    assert transform_point(matrix, tau(p)) == tau(m(p))
    image = transform_line(matrix, chord(p, q))
    assert image == chord(m(p), m(q))
