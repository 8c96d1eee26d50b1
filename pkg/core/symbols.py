#!/usr/bin/env python3
"""
Pascal symbol combinatorics
Canonical 2x3 letter grids, the 60 symbol classes, indeterminacy partitions and Kirkman/Steiner triples
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, FrozenSet, Iterator, List, Mapping, Sequence, Tuple, Union

from core.errors import SymbolError
from core.sextuple import LETTERS, Partition
from utils.helpers import safe_log

Grid = Tuple[Tuple[str, str, str], Tuple[str, str, str]]

# Column permutations of a 2x3 grid
_COLUMN_ORDERS = tuple(permutations(range(3)))


def _validate_grid(grid: Sequence[Sequence[str]]) -> Grid:
    rows = [tuple(row) for row in grid]
    if len(rows) != 2 or any(len(row) != 3 for row in rows):
        raise SymbolError(f"Pascal symbol must be a 2x3 grid, got {grid!r}")
    letters = [letter for row in rows for letter in row]
    unknown = [x for x in letters if x not in LETTERS]
    if unknown:
        raise SymbolError(f"Unknown letters in Pascal symbol: {''.join(unknown)}")
    if len(set(letters)) != 6:
        raise SymbolError(f"Pascal symbol must use each letter once: {''.join(letters)}")
    return rows[0], rows[1]


def shuffles(grid: Grid) -> List[Grid]:
    """The 12 row-swap/column-permutation images of a grid"""
    images = []
    for top, bottom in (grid, grid[::-1]):
        for order in _COLUMN_ORDERS:
            images.append((tuple(top[i] for i in order), tuple(bottom[i] for i in order)))
    return images


def _grid_key(grid: Grid) -> str:
    return "".join(grid[0]) + "".join(grid[1])


class PascalSymbol:
    """
    A 2x3 arrangement of the letters A-F modulo row and column shuffles

    The stored grid is the lexicographically minimal (row-major) image among
    the 12 shuffles, so equality and hashing compare canonical grids.
    """

    __slots__ = ('grid',)

    def __init__(self, grid: Union[str, Sequence[Sequence[str]]]):
        if isinstance(grid, str):
            grid = parse_grid(grid)
        checked = _validate_grid(grid)
        self.grid: Grid = min(shuffles(checked), key=_grid_key)

    @property
    def top(self) -> Tuple[str, str, str]:
        return self.grid[0]

    @property
    def bottom(self) -> Tuple[str, str, str]:
        return self.grid[1]

    def columns(self) -> List[Tuple[str, str]]:
        return list(zip(self.grid[0], self.grid[1]))

    def representatives(self) -> List[Grid]:
        """All 12 grids representing this symbol"""
        return shuffles(self.grid)

    def relabel(self, mapping: Mapping[str, str]) -> 'PascalSymbol':
        return PascalSymbol([[mapping[x] for x in row] for row in self.grid])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PascalSymbol):
            return NotImplemented
        return self.grid == other.grid

    def __lt__(self, other: 'PascalSymbol') -> bool:
        return _grid_key(self.grid) < _grid_key(other.grid)

    def __hash__(self) -> int:
        return hash(self.grid)

    def __str__(self) -> str:
        return format_grid(self.grid)

    def __repr__(self) -> str:
        return f"PascalSymbol('{self}')"


def parse_grid(text: str) -> Grid:
    """
    Parse the "XYZ/UVW" text format

    Raises:
        SymbolError: on a malformed string
    """
    parts = text.strip().split('/')
    if len(parts) != 2 or any(len(part) != 3 for part in parts):
        raise SymbolError(f"Pascal symbol must look like 'ABC/FED', got {text!r}")
    return _validate_grid([tuple(part.upper()) for part in parts])


def format_grid(grid: Sequence[Sequence[str]]) -> str:
    return "".join(grid[0]) + "/" + "".join(grid[1])


def canonicalize(grid: Union[str, Sequence[Sequence[str]]]) -> PascalSymbol:
    """
    Canonical symbol of a grid

    Args:
        grid: "ABC/FED" text or a 2x3 nested sequence

    Returns:
        PascalSymbol holding the minimal shuffle image

    Raises:
        SymbolError: if a letter repeats or the shape is wrong
    """
    return PascalSymbol(grid)


@lru_cache(maxsize=1)
def enumerate_symbols() -> Tuple[PascalSymbol, ...]:
    """The 60 Pascal symbols, sorted by canonical grid"""
    found = {PascalSymbol((order[:3], order[3:])) for order in permutations(LETTERS)}
    symbols = tuple(sorted(found))
    safe_log(f"Enumerated {len(symbols)} Pascal symbols", "DEBUG")
    return symbols


def indeterminacy_partitions(s: PascalSymbol) -> List[Partition]:
    """
    The six partitions whose polydiagonals make up the indeterminacy locus of a symbol

    For the grid [x1 x2 x3 / y1 y2 y3]: the two rows, the three column pairs
    {xi xj, yi yj} and the row matching {x1 y1, x2 y2, x3 y3}.
    """
    x, y = s.grid
    partitions = [Partition.from_blocks([x]), Partition.from_blocks([y])]
    for i, j in ((0, 1), (0, 2), (1, 2)):
        partitions.append(Partition.from_blocks([(x[i], x[j]), (y[i], y[j])]))
    partitions.append(Partition.from_blocks([(x[k], y[k]) for k in range(3)]))
    return partitions


@dataclass(frozen=True)
class SymbolTriple:
    """Three pairwise distinct Pascal symbols, stored sorted"""
    symbols: Tuple[PascalSymbol, PascalSymbol, PascalSymbol]

    def __post_init__(self):
        if len(set(self.symbols)) != 3:
            raise SymbolError(f"Triple needs three distinct symbols: {[str(s) for s in self.symbols]}")
        object.__setattr__(self, 'symbols', tuple(sorted(self.symbols)))

    def __iter__(self) -> Iterator[PascalSymbol]:
        return iter(self.symbols)

    def as_set(self) -> FrozenSet[PascalSymbol]:
        return frozenset(self.symbols)

    def relabel(self, mapping: Mapping[str, str]):
        return type(self)(tuple(s.relabel(mapping) for s in self.symbols))

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.symbols)


class KTriple(SymbolTriple):
    """Three Pascals meeting in a Kirkman point"""


class STriple(SymbolTriple):
    """Three Pascals with a common top row and cyclically shifted bottom rows, meeting in a Steiner point"""


BASE_GRID = "ABC/FED"
KIRKMAN_BASE = ("AEC/DBF", "BDA/FCE", "CFB/EAD")
STEINER_BASE = ("ABC/FED", "ABC/DFE", "ABC/EDF")


def _grid_relabeling(grid: Union[str, PascalSymbol, Sequence[Sequence[str]]]) -> Dict[str, str]:
    """Letter map carrying the base grid [ABC/FED] onto `grid` cell by cell"""
    if isinstance(grid, PascalSymbol):
        cells = grid.grid
    elif isinstance(grid, str):
        cells = parse_grid(grid)
    else:
        cells = _validate_grid(grid)
    base = parse_grid(BASE_GRID)
    return {base[r][c]: cells[r][c] for r in range(2) for c in range(3)}


def kirkman_triple_of(grid: Union[str, PascalSymbol, Sequence[Sequence[str]]]) -> KTriple:
    """
    Kirkman triple attached to a grid

    Args:
        grid: A 2x3 grid (any representative gives the same triple)

    Returns:
        The base triple ([AEC/DBF], [BDA/FCE], [CFB/EAD]) transported to `grid`
    """
    mapping = _grid_relabeling(grid)
    return KTriple(tuple(PascalSymbol(g).relabel(mapping) for g in KIRKMAN_BASE))


def steiner_triple_of(grid: Union[str, PascalSymbol, Sequence[Sequence[str]]]) -> STriple:
    mapping = _grid_relabeling(grid)
    return STriple(tuple(PascalSymbol(g).relabel(mapping) for g in STEINER_BASE))


def _orbit(base: Sequence[str], triple_type) -> Tuple:
    seen: Dict[FrozenSet[PascalSymbol], SymbolTriple] = {}
    base_symbols = [PascalSymbol(g) for g in base]
    for image in permutations(LETTERS):
        mapping = dict(zip(LETTERS, image))
        triple = triple_type(tuple(s.relabel(mapping) for s in base_symbols))
        seen.setdefault(triple.as_set(), triple)
    return tuple(sorted(seen.values(), key=lambda t: [str(s) for s in t.symbols]))


@lru_cache(maxsize=1)
def kirkman_triples() -> Tuple[KTriple, ...]:
    """All 60 Kirkman triples (orbit of the base triple under letter permutations)"""
    triples = _orbit(KIRKMAN_BASE, KTriple)
    safe_log(f"Generated {len(triples)} Kirkman triples", "DEBUG")
    return triples


@lru_cache(maxsize=1)
def steiner_triples() -> Tuple[STriple, ...]:
    """All 20 Steiner triples"""
    triples = _orbit(STEINER_BASE, STriple)
    safe_log(f"Generated {len(triples)} Steiner triples", "DEBUG")
    return triples
