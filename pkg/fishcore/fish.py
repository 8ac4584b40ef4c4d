"""
Fighting Fish
Glued cell complexes grown from a head by upper, lower and double gluings
"""
import json
from collections import deque
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from utils.errors import BadCell, EdgeOccupied, FishBijError, NotDoubleSite, ParseError

CODE_VERSION = b"fishbij/1:"

# Canonical BFS neighbour order
EDGES = ('ru', 'rl', 'lu', 'll')


@dataclass(frozen=True)
class Cell:
    """One 45-degree cell; each field is the id of the cell glued across that edge"""
    lu: Optional[int] = None
    ll: Optional[int] = None
    ru: Optional[int] = None
    rl: Optional[int] = None


class Orientation(Enum):
    DESCENDING = "descending"
    ASCENDING = "ascending"


class StemKind(Enum):
    TAIL = "tail"
    ONE_FREE = "one_free"
    BRANCH = "branch"


@dataclass(frozen=True)
class StripRef:
    """A maximal strip, cells listed top->bottom (descending) or bottom->top (ascending)"""
    orientation: Orientation
    cells: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def first(self) -> int:
        return self.cells[0]

    @property
    def last(self) -> int:
        return self.cells[-1]


@dataclass(frozen=True)
class CellCoord:
    """u counts right-lower steps from the head, v counts right-upper steps"""
    u: int
    v: int

    @property
    def x(self) -> int:
        return self.u + self.v

    @property
    def y(self) -> int:
        return self.v - self.u


@dataclass(frozen=True, eq=False)
class Fish:
    """
    A fighting fish as an explicit gluing graph.

    Ids are whatever the constructor produced; equality and hashing go through
    the canonical code, so two fish built by different growth histories compare
    equal when they are the same complex.
    """
    cells: Tuple[Cell, ...]
    head: int = 0

    def __len__(self) -> int:
        return len(self.cells)

    def __getitem__(self, c: int) -> Cell:
        return self.cells[c]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fish):
            return NotImplemented
        return self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __repr__(self) -> str:
        return f"Fish(size={size(self)}, cells={len(self.cells)})"

    @cached_property
    def bfs_order(self) -> Tuple[int, ...]:
        return _bfs_order(self)

    @cached_property
    def code(self) -> bytes:
        return canonical_code(self)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def new_head() -> Fish:
    """The one-cell fish"""
    return Fish(cells=(Cell(),), head=0)


def _check_cell(f: Fish, c: int):
    if not isinstance(c, int) or not 0 <= c < len(f.cells):
        raise BadCell(f"cell {c} out of range for a fish with {len(f.cells)} cells")


def glue_upper(f: Fish, c: int) -> Fish:
    """Attach a new cell to the free right upper edge of c"""
    _check_cell(f, c)
    if f.cells[c].ru is not None:
        raise EdgeOccupied(f"right upper edge of cell {c} is glued to {f.cells[c].ru}")
    d = len(f.cells)
    cells = list(f.cells)
    cells[c] = replace(cells[c], ru=d)
    cells.append(Cell(ll=c))
    return Fish(tuple(cells), f.head)


def glue_lower(f: Fish, c: int) -> Fish:
    """Attach a new cell to the free right lower edge of c"""
    _check_cell(f, c)
    if f.cells[c].rl is not None:
        raise EdgeOccupied(f"right lower edge of cell {c} is glued to {f.cells[c].rl}")
    d = len(f.cells)
    cells = list(f.cells)
    cells[c] = replace(cells[c], rl=d)
    cells.append(Cell(lu=c))
    return Fish(tuple(cells), f.head)


def glue_double(f: Fish, a: int, b: int) -> Fish:
    """Attach a new cell to both a and b, where a and b sit on the right edges of a common cell"""
    _check_cell(f, a)
    _check_cell(f, b)
    c = f.cells[a].ll
    if c is None or f.cells[b].lu != c:
        raise NotDoubleSite(f"cells {a} and {b} are not the upper and lower neighbours of one cell")
    if f.cells[a].rl is not None:
        raise EdgeOccupied(f"right lower edge of cell {a} is glued to {f.cells[a].rl}")
    if f.cells[b].ru is not None:
        raise EdgeOccupied(f"right upper edge of cell {b} is glued to {f.cells[b].ru}")
    d = len(f.cells)
    cells = list(f.cells)
    cells[a] = replace(cells[a], rl=d)
    cells[b] = replace(cells[b], ru=d)
    cells.append(Cell(lu=a, ll=b))
    return Fish(tuple(cells), f.head)


def double_sites(f: Fish) -> List[Tuple[int, int]]:
    """All (a, b) pairs where a double gluing is legal"""
    sites = []
    for cell in f.cells:
        if cell.ru is None or cell.rl is None:
            continue
        if f.cells[cell.ru].rl is None and f.cells[cell.rl].ru is None:
            sites.append((cell.ru, cell.rl))
    return sites


def growth_script(steps: Iterable[Sequence]) -> Fish:
    """
    Build a fish from ('up', c), ('down', c) and ('double', a, b) steps.

    Ids refer to cells in creation order: the head is 0 and the k-th
    gluing creates cell k.
    """
    f = new_head()
    for step in steps:
        kind = step[0]
        if kind == 'up':
            f = glue_upper(f, step[1])
        elif kind == 'down':
            f = glue_lower(f, step[1])
        elif kind == 'double':
            f = glue_double(f, step[1], step[2])
        else:
            raise ParseError(f"unknown growth step '{kind}'")
    return f


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

def size(f: Fish) -> int:
    """Number of free right edges minus 1"""
    free = 0
    for cell in f.cells:
        free += (cell.ru is None) + (cell.rl is None)
    return free - 1


def free_left_edges(f: Fish) -> int:
    return sum((cell.lu is None) + (cell.ll is None) for cell in f.cells)


def find_head(cells: Sequence[Cell]) -> int:
    """The unique cell with both left edges free"""
    heads = [i for i, cell in enumerate(cells) if cell.lu is None and cell.ll is None]
    if len(heads) != 1:
        raise FishBijError(f"expected exactly one head, found {len(heads)}")
    return heads[0]


def strips(f: Fish, orientation: Orientation) -> List[StripRef]:
    """
    Partition the cells into maximal strips of one orientation.

    Strips are listed in canonical BFS order of their first cell (top cell
    for descending strips, bottom cell for ascending ones).
    """
    result = []
    if orientation is Orientation.DESCENDING:
        for c in f.bfs_order:
            if f.cells[c].lu is None:
                result.append(_walk(f, c, 'rl', orientation))
    else:
        for c in f.bfs_order:
            if f.cells[c].ll is None:
                result.append(_walk(f, c, 'ru', orientation))
    return result


def _walk(f: Fish, start: int, edge: str, orientation: Orientation) -> StripRef:
    cells = [start]
    nxt = getattr(f.cells[start], edge)
    while nxt is not None:
        cells.append(nxt)
        nxt = getattr(f.cells[nxt], edge)
    return StripRef(orientation, tuple(cells))


def strip_of(f: Fish, c: int, orientation: Orientation) -> StripRef:
    """The strip of the given orientation that contains c"""
    _check_cell(f, c)
    back, forward = ('lu', 'rl') if orientation is Orientation.DESCENDING else ('ll', 'ru')
    first = c
    while getattr(f.cells[first], back) is not None:
        first = getattr(f.cells[first], back)
    return _walk(f, first, forward, orientation)


def jaw(f: Fish) -> StripRef:
    """The descending strip containing the head"""
    return _walk(f, f.head, 'rl', Orientation.DESCENDING)


def is_branch(f: Fish, c: int) -> bool:
    """
    Both right edges glued and the right point is not closed off.

    The right point is interior only when the upper neighbour's lower edge and
    the lower neighbour's upper edge are glued to one and the same cell.
    """
    cell = f.cells[c]
    if cell.ru is None or cell.rl is None:
        return False
    beyond = f.cells[cell.ru].rl
    return beyond is None or beyond != f.cells[cell.rl].ru


def stem_cells(f: Fish) -> Dict[int, StemKind]:
    """Stem cells keyed by id with their classification"""
    stems = {}
    for c, cell in enumerate(f.cells):
        free = (cell.ru is None) + (cell.rl is None)
        if free == 2:
            stems[c] = StemKind.TAIL
        elif free == 1:
            stems[c] = StemKind.ONE_FREE
        elif is_branch(f, c):
            stems[c] = StemKind.BRANCH
    return stems


def tails(f: Fish) -> List[int]:
    return [c for c, cell in enumerate(f.cells) if cell.ru is None and cell.rl is None]


def branch_cells(f: Fish) -> List[int]:
    return [c for c in range(len(f.cells)) if is_branch(f, c)]


def is_tail(f: Fish, c: int) -> bool:
    _check_cell(f, c)
    return f.cells[c].ru is None and f.cells[c].rl is None


# ---------------------------------------------------------------------------
# Conjugation
# ---------------------------------------------------------------------------

def conjugate(f: Fish) -> Fish:
    """Reflect across the horizontal axis; cell ids are preserved"""
    cells = tuple(Cell(lu=cell.ll, ll=cell.lu, ru=cell.rl, rl=cell.ru) for cell in f.cells)
    return Fish(cells, f.head)


def conjugate_cell(f: Fish, c: int) -> int:
    """
    The id in conjugate(f) of the reflection of cell c.

    conjugate keeps every cell id, so this is c itself; out-of-range ids
    raise BadCell.
    """
    _check_cell(f, c)
    return c


def is_symmetric(f: Fish) -> bool:
    return f.code == conjugate(f).code


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def _bfs_order(f: Fish) -> Tuple[int, ...]:
    seen = {f.head}
    order = [f.head]
    queue = deque([f.head])
    while queue:
        c = queue.popleft()
        cell = f.cells[c]
        for edge in EDGES:
            nb = getattr(cell, edge)
            if nb is not None and nb not in seen:
                seen.add(nb)
                order.append(nb)
                queue.append(nb)
    if len(order) != len(f.cells):
        raise FishBijError(f"fish is disconnected: reached {len(order)} of {len(f.cells)} cells")
    return tuple(order)


def canonicalize(f: Fish) -> Tuple[Fish, Dict[int, int]]:
    """Relabel cells in canonical BFS order; returns the new fish and the old->new id map"""
    order = f.bfs_order
    index = {old: new for new, old in enumerate(order)}

    def remap(c: Optional[int]) -> Optional[int]:
        return None if c is None else index[c]

    cells = tuple(
        Cell(lu=remap(f.cells[old].lu), ll=remap(f.cells[old].ll),
             ru=remap(f.cells[old].ru), rl=remap(f.cells[old].rl))
        for old in order
    )
    return Fish(cells, 0), index


def canonical_code(f: Fish) -> bytes:
    """
    Version prefix followed by the compact JSON array of [ru, rl, lu, ll]
    rows in canonical BFS order (head first, nulls for free edges).
    """
    canon, _ = canonicalize(f)
    rows = [[cell.ru, cell.rl, cell.lu, cell.ll] for cell in canon.cells]
    return CODE_VERSION + json.dumps(rows, separators=(',', ':')).encode('ascii')


def decode(code: bytes) -> Fish:
    """Inverse of canonical_code"""
    if not code.startswith(CODE_VERSION):
        raise ParseError("fish code has an unknown version prefix", 0)
    try:
        rows = json.loads(code[len(CODE_VERSION):].decode('ascii'))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ParseError(f"fish code is not valid JSON: {e}", len(CODE_VERSION))
    return _from_rows([{'ru': r[0], 'rl': r[1], 'lu': r[2], 'll': r[3]} for r in rows])


def fish_to_json(f: Fish) -> Dict:
    """{"cells": [{"ru", "rl", "lu", "ll"}, ...]} in canonical order, head = 0"""
    canon, _ = canonicalize(f)
    return {
        "cells": [
            {"ru": cell.ru, "rl": cell.rl, "lu": cell.lu, "ll": cell.ll}
            for cell in canon.cells
        ]
    }


def fish_from_json(data: Union[str, Dict]) -> Fish:
    """
    Decode fish JSON and check its structure.

    Structural checks only (gluing consistency, a unique head, connectivity,
    balanced free edges); that the complex is actually constructible is
    checked by bijection.load_fish.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid fish JSON: {e.msg}", e.pos)
    if not isinstance(data, dict) or not isinstance(data.get('cells'), list):
        raise ParseError("fish JSON must be an object with a 'cells' list")
    return _from_rows(data['cells'])


def _from_rows(rows: List) -> Fish:
    if not rows:
        raise ParseError("a fish has at least one cell")
    count = len(rows)
    cells = []
    for i, row in enumerate(rows):
        if not isinstance(row, dict):
            raise ParseError(f"cell {i} is not an object")
        values = {}
        for edge in EDGES:
            value = row.get(edge)
            if value is not None and (not isinstance(value, int) or isinstance(value, bool)
                                      or not 0 <= value < count):
                raise ParseError(f"cell {i} edge '{edge}' refers to invalid cell {value!r}")
            values[edge] = value
        cells.append(Cell(**values))

    for i, cell in enumerate(cells):
        if cell.ru is not None and cells[cell.ru].ll != i:
            raise ParseError(f"cell {i} right upper edge is not matched by cell {cell.ru}")
        if cell.rl is not None and cells[cell.rl].lu != i:
            raise ParseError(f"cell {i} right lower edge is not matched by cell {cell.rl}")
        if cell.lu is not None and cells[cell.lu].rl != i:
            raise ParseError(f"cell {i} left upper edge is not matched by cell {cell.lu}")
        if cell.ll is not None and cells[cell.ll].ru != i:
            raise ParseError(f"cell {i} left lower edge is not matched by cell {cell.ll}")

    try:
        head = find_head(cells)
        f = Fish(tuple(cells), head)
        f.bfs_order
    except FishBijError as e:
        raise ParseError(str(e))
    if size(f) + 1 != free_left_edges(f):
        raise ParseError("free right and free left edge counts differ")
    return f


# ---------------------------------------------------------------------------
# Planar placement
# ---------------------------------------------------------------------------

_STEP = {
    'ru': (0, 1),
    'rl': (1, 0),
    'lu': (-1, 0),
    'll': (0, -1),
}


def cell_at_path(f: Fish, path: Iterable[str]) -> int:
    """Follow glued edges (names from EDGES) starting at the head"""
    c = f.head
    for edge in path:
        if edge not in _STEP:
            raise ParseError(f"unknown edge name '{edge}'")
        nxt = getattr(f.cells[c], edge)
        if nxt is None:
            raise BadCell(f"edge '{edge}' of cell {c} is free")
        c = nxt
    return c


def cell_coords(f: Fish) -> Dict[int, CellCoord]:
    """
    Lattice coordinates of every cell, derived by BFS from the head.

    Every gluing is re-checked against the stored coordinates; distinct cells
    may still share a coordinate since fish are branching surfaces.
    """
    coords = {f.head: CellCoord(0, 0)}
    queue = deque([f.head])
    while queue:
        c = queue.popleft()
        here = coords[c]
        for edge in EDGES:
            nb = getattr(f.cells[c], edge)
            if nb is None:
                continue
            du, dv = _STEP[edge]
            derived = CellCoord(here.u + du, here.v + dv)
            if nb not in coords:
                coords[nb] = derived
                queue.append(nb)
            elif coords[nb] != derived:
                raise FishBijError(
                    f"coordinates of cell {nb} depend on the gluing path: "
                    f"{coords[nb]} vs {derived}"
                )
    return coords
