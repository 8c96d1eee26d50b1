from fractions import Fraction

import pytest
from hypothesis import given

from core.errors import GeometryError, ParseError
from core.projgeom import Mobius, P1Point
from core.sextuple import (Partition, Sextuple, all_partitions, in_H_circ, in_polydiagonal, is_indeterminate, refines,
                           theta, tri_symmetric)
from core.symbols import PascalSymbol
from features.hexagram_suites import TRI_SYMMETRIC_SEXTUPLE
from tests.strategies import sextuples


def test_partition_parse_and_format():
    pi = Partition.parse("fa.be.cd")
    assert str(pi) == "AF.BE.CD"
    assert pi.type == (2, 2, 2)
    assert Partition.parse("ABC") == Partition.from_blocks(["ABC"])
    assert str(Partition.parse("ABC")) == "ABC.D.E.F"


@pytest.mark.parametrize("text", ["AB.BC", "ABG", "AB.CD.EF.A"])
def test_partition_parse_rejects(text):
    with pytest.raises(ParseError):
        Partition.parse(text)


def test_two_hundred_three_partitions():
    partitions = all_partitions()
    assert len(partitions) == 203
    assert len(set(partitions)) == 203
    assert sum(1 for pi in partitions if pi.type == (2, 2, 2)) == 15
    assert sum(1 for pi in partitions if pi.type == (3, 1, 1, 1)) == 20


def test_refinement():
    trivial = Partition.trivial()
    pair = Partition.parse("AB")
    coarse = Partition.parse("AB.CD")
    assert refines(trivial, pair)
    assert refines(pair, coarse)
    assert not refines(coarse, pair)
    assert all(trivial.refines(pi) for pi in all_partitions())


def test_theta_and_polydiagonals():
    h = Sextuple({'A': 1, 'B': 1, 'C': 2, 'D': None, 'E': None, 'F': 5})
    assert theta(h) == Partition.parse("AB.DE")
    assert in_polydiagonal(h, Partition.parse("AB"))
    assert not in_polydiagonal(h, Partition.parse("AC"))
    assert in_H_circ(h)
    assert not in_H_circ(Sextuple.from_values([1, 1, 1, 1, 2, 3]))


def test_sextuple_json():
    h = Sextuple.from_json({'a': '1/2', 'B': 'inf', 'C': '3', 'D': '-1', 'E': '0', 'F': 7})
    assert h['B'].is_infinity
    assert h.to_json() == {'A': '1/2', 'B': 'inf', 'C': '3', 'D': '-1', 'E': '0', 'F': '7'}
    with pytest.raises(ParseError):
        Sextuple.from_json({'A': '1'})
    with pytest.raises(ParseError):
        Sextuple.from_json([1, 2, 3, 4, 5, 6])


def test_indeterminacy_is_combinatorial():
    symbol = PascalSymbol("ABC/FED")
    assert is_indeterminate(Sextuple.from_values([1, 2, 3, 3, 2, 1]), symbol)
    assert is_indeterminate(Sextuple.from_values([4, 4, 4, 1, 2, 3]), symbol)
    assert not is_indeterminate(Sextuple.from_values([4, 4, 1, 2, 3, 5]), symbol)


def test_tri_symmetric_witness():
    h = Sextuple.from_values(TRI_SYMMETRIC_SEXTUPLE)
    witness = tri_symmetric(h)
    assert witness is not None
    orbit = {witness, (witness - 1) / witness, 1 / (1 - witness)}
    assert orbit == {Fraction(2), Fraction(1, 2), Fraction(-1)}


def test_tri_symmetric_is_projectively_invariant():
    m = Mobius(2, 1, 1, 3)
    h = Sextuple.from_values(TRI_SYMMETRIC_SEXTUPLE).map_points(m.apply)
    assert tri_symmetric(h) is not None


def test_generic_sextuple_is_not_tri_symmetric():
    assert tri_symmetric(Sextuple.from_values([0, 1, None, 3, 5, 7])) is None


def test_tri_symmetric_needs_distinct_points():
    with pytest.raises(GeometryError):
        tri_symmetric(Sextuple.from_values([0, 0, 1, 2, 3, 4]))


@given(h=sextuples)
def test_relabel_inverts(h: Sextuple):
    mapping = dict(zip("ABCDEF", "BCAEFD"))
    inverse = {v: k for k, v in mapping.items()}
    assert h.relabel(mapping).relabel(inverse) == h
    assert h.relabel(mapping)['B'] == h['A']
    assert theta(h).is_trivial()


def test_p1_points_are_shared_with_projgeom():
    h = Sextuple.from_values([0, 1, None, 2, 3, 4])
    assert h['C'] == P1Point.infinity()
    assert h.has_infinity()
    assert h.is_injective()
