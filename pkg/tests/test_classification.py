from collections import Counter

import pytest
from hypothesis import given, settings

from core.classification import (EXPECTED_222_COUNTS, NORMALIZED_SURJECTIVE_MATRIX, Classifier222, ConstantLine,
                                 Pencil, Surjective, base_222, classify_222, classify_codim2, fiber_matrix,
                                 pattern_rule_222, tag_from_samples)
from core.degeneration import indeterminate_symbols
from core.errors import CoincidentElementsError, DegenerationSpecError
from core.projgeom import P1Point, ProjLine, ProjPoint, tau
from core.sextuple import Sextuple
from core.symbols import PascalSymbol, enumerate_symbols
from features.classification_suites import NORMALIZED_TRIPLE
from tests.strategies import distinct_triples

BASE = PascalSymbol("ABC/FED")


@pytest.fixture(scope="module")
def normalized():
    return classify_222(*NORMALIZED_TRIPLE)


def test_forty_four_constant_sixteen_not(normalized):
    assert normalized.constant_count() == 44
    assert normalized.non_constant_count() == 16
    assert normalized.counts() == dict(sorted(EXPECTED_222_COUNTS.items()))
    assert normalized.matches_theorem()


def test_non_constant_symbols_are_the_undefined_ones(normalized):
    non_constant = {s for s, tag in normalized.entries.items() if not isinstance(tag, ConstantLine)}
    assert non_constant == set(indeterminate_symbols(base_222(*NORMALIZED_TRIPLE)))


def test_base_symbol_is_surjective(normalized):
    assert isinstance(normalized.entries[BASE], Surjective)
    matrix = fiber_matrix(base_222(*NORMALIZED_TRIPLE), BASE)
    assert tuple(map(tuple, matrix)) == NORMALIZED_SURJECTIVE_MATRIX


def test_named_lines(normalized):
    triangle = normalized.triangle
    ch_symbols = [s for s, tag in normalized.entries.items() if isinstance(tag, ConstantLine) and tag.kind == 'ch']
    assert len(ch_symbols) == 8
    assert all(normalized.entries[s].line == triangle.ch for s in ch_symbols)
    pencils = [tag for tag in normalized.entries.values() if isinstance(tag, Pencil)]
    assert {tag.center for tag in pencils} == {triangle.P, triangle.Q, triangle.R}


def test_pattern_rule_counts():
    assert Counter(pattern_rule_222(s) for s in enumerate_symbols()) == EXPECTED_222_COUNTS
    assert pattern_rule_222(BASE) == 'surjective'


def test_classification_json(normalized):
    payload = normalized.to_json()
    assert (payload['P'], payload['Q'], payload['R']) == ('1', '0', '-1')
    assert payload['constant'] == 44
    assert payload['symbols']['ABC/FED'] == {'tag': 'surjective', 'kind': 'surjective'}
    assert payload['polar_triangle']['CH'] == [3, 0, 1]


def test_other_triple_with_infinity():
    result = Classifier222().classify(P1Point.from_value(2), P1Point.infinity(), P1Point.from_value(-3))
    assert result.matches_theorem()


def test_classifier_needs_distinct_points():
    with pytest.raises(CoincidentElementsError):
        classify_222(P1Point.from_value(1), P1Point.from_value(1), P1Point.from_value(2))


def test_tag_from_samples():
    constant = tag_from_samples([ProjLine(1, 2, 3), ProjLine(2, 4, 6)])
    assert isinstance(constant, ConstantLine) and constant.resolved
    pencil = tag_from_samples([ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)])
    assert isinstance(pencil, Pencil)
    assert pencil.center == ProjPoint(0, 0, 1)
    assert isinstance(tag_from_samples([ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1)]), Surjective)


def test_triple_point_base():
    base = Sextuple.from_values([2, 2, 2, -1, 0, 1])
    result = classify_codim2(base)
    assert result.base_type == (3, 1, 1, 1)
    assert len(result.pencils()) == 6
    assert result.all_through(tau(P1Point.from_value(2)))
    assert result.center_mismatches() == []


def test_double_pair_base():
    base = Sextuple.from_values([2, 2, 1, -1, 3, 3])
    result = classify_codim2(base)
    assert result.base_type == (2, 2, 1, 1)
    assert len(result.pencils()) == 4
    assert result.center_mismatches() == []
    assert result.pencils()[BASE].center == ProjPoint(3, 5, 11)


def test_codim2_needs_a_codim2_base():
    with pytest.raises(DegenerationSpecError):
        classify_codim2(Sextuple.from_values([1, 2, 3, 4, 5, 6]))


@given(triple=distinct_triples)
@settings(max_examples=10, deadline=None)
def test_forty_four_sixteen_for_any_triple(triple):
    result = classify_222(*triple)
    assert result.constant_count() == 44
    assert result.matches_theorem()


@pytest.mark.parametrize("values, pencils", [
    ([None, None, 1, -1, 3, 3], 4),
    ([2, 2, 1, -1, None, None], 4),
    ([None, None, None, -1, 0, 1], 6),
])
def test_codim2_bases_at_infinity(values, pencils):
    result = classify_codim2(Sextuple.from_values(values))
    assert len(result.pencils()) == pencils
    assert result.center_mismatches() == []
