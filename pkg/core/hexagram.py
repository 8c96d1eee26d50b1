#!/usr/bin/env python3
"""
Incidences above the Pascals
Kirkman and Steiner points, the Kirkman indeterminacy components and generic collinear/concurrent family discovery
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from core.errors import ConcurrencyError
from core.pascal import all_pascals, eval_pascal
from core.projgeom import ProjLine, ProjPoint, incident, join, meet
from core.sextuple import Partition, Sextuple
from core.symbols import KTriple, PascalSymbol, STriple, SymbolTriple, kirkman_triples, steiner_triples
from utils.helpers import safe_log

# Components of the Kirkman indeterminacy locus for the triple of [ABC/FED]
KIRKMAN_COMPONENTS_TEXT = ("def, cef, ab.ef, bdf, ac.df, bc.de, ade, bcf, bd.cf, ae.cf, "
                           "ad.cf, ce.bf, ce.bd, ace, ad.ce, ae.bf, ad.bf, ae.bd, abd, abc")

PascalTable = Mapping[PascalSymbol, Optional[ProjLine]]


def common_point(h: Sextuple, triple: SymbolTriple, pascals: Optional[PascalTable] = None) -> Optional[ProjPoint]:
    """
    Common point of the three Pascals of a triple

    Defined when at least two member Pascals are defined and distinct; every
    defined member must then pass through it.

    Raises:
        ConcurrencyError: if a defined member misses the point
    """
    lines = [pascals[s] if pascals is not None else eval_pascal(h, s) for s in triple]
    defined = [line for line in lines if line is not None]
    distinct = list(dict.fromkeys(defined))
    if len(distinct) < 2:
        return None
    point = meet(distinct[0], distinct[1])
    for line in distinct[2:]:
        if not incident(point, line):
            raise ConcurrencyError(f"Pascals of {triple} are not concurrent at {h}")
    return point


def kirkman_point(h: Sextuple, kt: KTriple, pascals: Optional[PascalTable] = None) -> Optional[ProjPoint]:
    return common_point(h, kt, pascals)


def steiner_point(h: Sextuple, st: STriple, pascals: Optional[PascalTable] = None) -> Optional[ProjPoint]:
    return common_point(h, st, pascals)


def kirkman_points(h: Sextuple, pascals: Optional[PascalTable] = None) -> Dict[KTriple, Optional[ProjPoint]]:
    """All 60 Kirkman points of h (None where undefined)"""
    table = pascals if pascals is not None else all_pascals(h)
    return {kt: common_point(h, kt, table) for kt in kirkman_triples()}


def steiner_points(h: Sextuple, pascals: Optional[PascalTable] = None) -> Dict[STriple, Optional[ProjPoint]]:
    """All 20 Steiner points of h (None where undefined)"""
    table = pascals if pascals is not None else all_pascals(h)
    return {st: common_point(h, st, table) for st in steiner_triples()}


def undefined_steiner_triples(h: Sextuple) -> List[STriple]:
    undefined = [st for st, point in steiner_points(h).items() if point is None]
    if undefined:
        safe_log(f"{len(undefined)} Steiner points undefined at {h}")
    return undefined


@dataclass(frozen=True)
class KirkmanComponentList:
    components: Tuple[Partition, ...]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def type_counts(self) -> Dict[Tuple[int, ...], int]:
        counts: Dict[Tuple[int, ...], int] = {}
        for partition in self.components:
            counts[partition.type] = counts.get(partition.type, 0) + 1
        return counts


def kirkman_indeterminacy_components() -> KirkmanComponentList:
    """
    The 20 polydiagonals where the Kirkman point of [ABC/FED] is undefined

    A letter triple such as def merges D, E, F; a pair of pairs such as ab.ef
    merges A with B and E with F.
    """
    components = []
    for token in KIRKMAN_COMPONENTS_TEXT.split(','):
        token = token.strip().upper()
        blocks = token.split('.') if '.' in token else [token]
        components.append(Partition.from_blocks(blocks))
    return KirkmanComponentList(tuple(components))


@dataclass(frozen=True)
class IncidenceFamily:
    carrier: Union[ProjPoint, ProjLine]
    members: Tuple[str, ...]

    def to_json(self) -> Dict[str, Any]:
        return {'carrier': self.carrier.to_list(), 'members': list(self.members)}


@dataclass(frozen=True)
class IncidenceReport:
    """Maximal collinear point families or concurrent line families"""
    kind: str
    families: Tuple[IncidenceFamily, ...]

    def __len__(self) -> int:
        return len(self.families)

    def member_sets(self) -> List[frozenset]:
        return [frozenset(f.members) for f in self.families]

    def to_json(self) -> Dict[str, Any]:
        return {'kind': self.kind, 'families': [f.to_json() for f in self.families]}


def _find_families(elements: Mapping[str, Union[ProjPoint, ProjLine]], min_size: int, connect, kind: str) -> IncidenceReport:
    if min_size < 3:
        raise ValueError("min_size must be at least 3")
    by_element: Dict[Any, List[str]] = {}
    for label, element in elements.items():
        by_element.setdefault(element, []).append(label)
    distinct = list(by_element)
    carriers: Dict[Any, Tuple[str, ...]] = {}
    for i, first in enumerate(distinct):
        for second in distinct[i + 1:]:
            carrier = connect(first, second)
            if carrier in carriers:
                continue
            members = tuple(sorted(label for element in distinct if _incident(element, carrier)
                                   for label in by_element[element]))
            carriers[carrier] = members
    families = [IncidenceFamily(c, m) for c, m in carriers.items() if len(m) >= min_size]
    families.sort(key=lambda f: (-len(f.members), f.members))
    return IncidenceReport(kind, tuple(families))


def _incident(element: Union[ProjPoint, ProjLine], carrier: Union[ProjPoint, ProjLine]) -> bool:
    if isinstance(element, ProjPoint):
        return incident(element, carrier)
    return incident(carrier, element)


def find_collinear_families(points: Mapping[str, ProjPoint], min_size: int = 3) -> IncidenceReport:
    """
    All maximal collinear families of labeled points

    Args:
        points: Label -> point
        min_size: Smallest family size reported (at least 3)

    Returns:
        IncidenceReport sorted by decreasing size
    """
    return _find_families(points, min_size, join, 'collinear')


def find_concurrent_families(lines: Mapping[str, ProjLine], min_size: int = 3) -> IncidenceReport:
    """All maximal concurrent families of labeled lines"""
    return _find_families(lines, min_size, meet, 'concurrent')


def pascal_line_labels(pascals: PascalTable) -> Dict[str, ProjLine]:
    """Defined Pascals keyed by symbol text, ready for family discovery"""
    return {str(s): line for s, line in pascals.items() if line is not None}
