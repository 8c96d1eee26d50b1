import pytest
from hypothesis import given, settings

from core.hexagram import (find_collinear_families, find_concurrent_families, kirkman_indeterminacy_components,
                           kirkman_point, kirkman_points, pascal_line_labels, steiner_point, steiner_points,
                           undefined_steiner_triples)
from core.pascal import all_pascals, eval_pascal
from core.projgeom import P1Point, ProjLine, ProjPoint, incident, tau
from core.sextuple import Sextuple, random_on_polydiagonal
from core.symbols import kirkman_triple_of, steiner_triple_of
from features.hexagram_suites import TRI_SYMMETRIC_SEXTUPLE
from tests.strategies import sextuples_with_infinity
from utils.helpers import make_rng


@given(h=sextuples_with_infinity)
@settings(max_examples=10, deadline=None)
def test_kirkman_and_steiner_points_are_defined(h: Sextuple):
    pascals = all_pascals(h)
    kirkman = kirkman_points(h, pascals)
    steiner = steiner_points(h, pascals)
    assert len(kirkman) == 60
    assert all(point is not None for point in kirkman.values())
    for triple, point in kirkman.items():
        assert all(incident(point, pascals[s]) for s in triple)
    assert len(steiner) == 20
    for triple, point in steiner.items():
        if point is not None:
            assert all(incident(point, pascals[s]) for s in triple)


def test_kirkman_components():
    components = kirkman_indeterminacy_components()
    assert len(components) == 20
    assert components.type_counts() == {(3, 1, 1, 1): 8, (2, 2, 1, 1): 12}
    assert len(set(components)) == 20


def test_base_triple_undefined_on_its_components():
    rng = make_rng(11)
    triple = kirkman_triple_of("ABC/FED")
    for pi in kirkman_indeterminacy_components():
        h = random_on_polydiagonal(rng, pi)
        assert kirkman_point(h, triple) is None, str(pi)


def test_kirkman_defined_with_one_double_point():
    h = Sextuple.from_values([1, 1, 2, 3, 5, 8])
    assert all(point is not None for point in kirkman_points(h).values())


def test_steiner_point_of_base_triple():
    h = Sextuple.from_values([0, 1, 3, 5, 7, None])
    point = steiner_point(h, steiner_triple_of("ABC/FED"))
    assert point is not None
    assert incident(point, eval_pascal(h, steiner_triple_of("ABC/FED").symbols[0]))


def test_tri_symmetric_sextuple_loses_a_steiner_point():
    h = Sextuple.from_values(TRI_SYMMETRIC_SEXTUPLE)
    undefined = undefined_steiner_triples(h)
    assert steiner_triple_of("ABC/FED") in undefined
    pascals = all_pascals(h)
    lines = {pascals[s] for s in steiner_triple_of("ABC/FED")}
    assert len(lines) == 1


def test_steiner_points_lie_on_concurrent_families():
    h = Sextuple.from_values([0, 1, 3, 5, 7, None])
    pascals = all_pascals(h)
    report = find_concurrent_families(pascal_line_labels(pascals))
    member_sets = report.member_sets()
    for triple in steiner_points(h, pascals):
        names = {str(s) for s in triple}
        assert any(names <= members for members in member_sets)
    assert all(len(family.members) >= 3 for family in report.families)


def test_collinear_families_on_the_conic():
    points = {str(v): tau(P1Point.from_value(v)) for v in range(5)}
    assert len(find_collinear_families(points)) == 0
    line_points = {'X': ProjPoint(1, 0, 0), 'Y': ProjPoint(1, 1, 0), 'Z': ProjPoint(0, 1, 0), 'W': ProjPoint(0, 0, 1)}
    report = find_collinear_families(line_points)
    assert report.member_sets() == [frozenset({'X', 'Y', 'Z'})]
    assert report.families[0].carrier == ProjLine(0, 0, 1)
    assert report.to_json()['kind'] == 'collinear'


def test_family_size_floor():
    with pytest.raises(ValueError):
        find_collinear_families({}, min_size=2)
