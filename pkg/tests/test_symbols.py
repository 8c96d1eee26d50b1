from collections import Counter

import pytest

from core.errors import SymbolError
from core.sextuple import Partition
from core.symbols import (PascalSymbol, canonicalize, enumerate_symbols, indeterminacy_partitions, kirkman_triple_of,
                          kirkman_triples, parse_grid, shuffles, steiner_triple_of, steiner_triples)


def test_sixty_symbols():
    symbols = enumerate_symbols()
    assert len(symbols) == 60
    assert len(set(symbols)) == 60
    assert list(symbols) == sorted(symbols)


@pytest.mark.parametrize("text", ["ABC/FED", "FED/ABC", "BAC/EFD", "cba/def"])
def test_shuffles_give_the_same_symbol(text):
    assert canonicalize(text) == PascalSymbol("ABC/FED")
    assert str(canonicalize(text)) == "ABC/FED"


def test_twelve_representatives():
    symbol = PascalSymbol("AEC/DBF")
    representatives = symbol.representatives()
    assert len(set(representatives)) == 12
    assert all(PascalSymbol(grid) == symbol for grid in representatives)
    assert len(shuffles(parse_grid("ABC/DEF"))) == 12


@pytest.mark.parametrize("text", ["ABC/ABC", "ABC/FEG", "ABCD/EF", "ABC", "AB/CDEF"])
def test_malformed_symbols(text):
    with pytest.raises(SymbolError):
        PascalSymbol(text)


def test_indeterminacy_partitions_of_base_grid():
    partitions = {str(pi) for pi in indeterminacy_partitions(PascalSymbol("ABC/FED"))}
    assert partitions == {'ABC.D.E.F', 'A.B.C.DEF', 'AB.C.D.EF', 'A.BC.DE.F', 'AC.B.DF.E', 'AF.BE.CD'}


def test_every_partition_type_is_expected():
    for symbol in enumerate_symbols():
        types = Counter(pi.type for pi in indeterminacy_partitions(symbol))
        assert types == {(3, 1, 1, 1): 2, (2, 2, 1, 1): 3, (2, 2, 2): 1}


def test_kirkman_triples():
    triples = kirkman_triples()
    assert len(triples) == 60
    assert len({t.as_set() for t in triples}) == 60
    assert kirkman_triple_of("ABC/FED").as_set() == {PascalSymbol(g) for g in ("AEC/DBF", "BDA/FCE", "CFB/EAD")}
    # every Pascal lies on three Kirkman triples
    assert set(Counter(s for t in triples for s in t).values()) == {3}


def test_kirkman_triple_is_intrinsic_to_the_symbol():
    symbol = PascalSymbol("ABC/FED")
    images = {kirkman_triple_of(grid).as_set() for grid in symbol.representatives()}
    assert len(images) == 1
    assert symbol not in next(iter(images))
    assert len({kirkman_triple_of(s).as_set() for s in enumerate_symbols()}) == 60


def test_steiner_triples_partition_the_symbols():
    triples = steiner_triples()
    assert len(triples) == 20
    members = [s for t in triples for s in t]
    assert len(members) == 60
    assert set(members) == set(enumerate_symbols())
    assert steiner_triple_of("ABC/FED").as_set() == {PascalSymbol(g) for g in ("ABC/FED", "ABC/DFE", "ABC/EDF")}


def test_steiner_triple_is_intrinsic_to_the_symbol():
    symbol = PascalSymbol("ABC/FED")
    images = {steiner_triple_of(grid).as_set() for grid in symbol.representatives()}
    assert len(images) == 1


def test_relabel_symbol():
    mapping = dict(zip("ABCDEF", "FEDCBA"))
    assert PascalSymbol("ABC/FED").relabel(mapping) == PascalSymbol("FED/ABC")
    assert Partition.parse("AB").relabel(mapping) == Partition.parse("EF")
