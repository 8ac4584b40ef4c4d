"""
Fish Construction
Builds a fish from a labelled stem tree by strip insertions
"""
from collections import deque
from typing import Dict, List, Optional, Tuple

from fishcore.fish import Cell, Fish, find_head
from ternary.labeling import OPPOSITE, Direction, StemNode
from utils.errors import InconsistentLabels


class FishBuilder:
    """
    Mutable gluing arrays; cells are only ever appended, so ids are stable.

    Strips only ever gain cells here, so every cell keeps the id of its
    descending and ascending strip, and every strip its top (descending) or
    bottom (ascending) cell.
    """

    def __init__(self):
        self.lu: List[Optional[int]] = []
        self.ll: List[Optional[int]] = []
        self.ru: List[Optional[int]] = []
        self.rl: List[Optional[int]] = []
        self.desc_of: List[Optional[int]] = []
        self.asc_of: List[Optional[int]] = []
        self.desc_top: List[int] = []
        self.asc_bottom: List[int] = []

    def new_cell(self) -> int:
        for edges in (self.lu, self.ll, self.ru, self.rl, self.desc_of, self.asc_of):
            edges.append(None)
        return len(self.lu) - 1

    def _desc(self, c: int) -> int:
        if self.desc_of[c] is None:
            self.desc_of[c] = len(self.desc_top)
            self.desc_top.append(c)
        return self.desc_of[c]

    def _asc(self, c: int) -> int:
        if self.asc_of[c] is None:
            self.asc_of[c] = len(self.asc_bottom)
            self.asc_bottom.append(c)
        return self.asc_of[c]

    def glue_ru(self, c: int, d: int):
        """Glue c's right upper edge to d's left lower edge"""
        self.ru[c] = d
        self.ll[d] = c
        if self.asc_of[c] is None and self.asc_of[d] is not None:
            sid = self.asc_of[d]
            self.asc_of[c] = sid
            if self.asc_bottom[sid] == d:
                self.asc_bottom[sid] = c
        else:
            self.asc_of[d] = self._asc(c)

    def glue_rl(self, c: int, d: int):
        """Glue c's right lower edge to d's left upper edge"""
        self.rl[c] = d
        self.lu[d] = c
        if self.desc_of[c] is None and self.desc_of[d] is not None:
            sid = self.desc_of[d]
            self.desc_of[c] = sid
            if self.desc_top[sid] == d:
                self.desc_top[sid] = c
        else:
            self.desc_of[d] = self._desc(c)

    def top_of_descending(self, c: int) -> int:
        return self.desc_top[self._desc(c)]

    def bottom_of_ascending(self, c: int) -> int:
        return self.asc_bottom[self._asc(c)]

    def add_north(self, w: int) -> int:
        if self.ru[w] is not None:
            raise InconsistentLabels(f"cell {w} already has an upper neighbour")
        d = self.new_cell()
        self.glue_ru(w, d)
        return d

    def add_east(self, w: int) -> int:
        if self.rl[w] is not None:
            raise InconsistentLabels(f"cell {w} already has a lower neighbour")
        d = self.new_cell()
        self.glue_rl(w, d)
        return d

    def add_west(self, w: int) -> int:
        """
        Insert an ascending strip along the left upper edges of Asc(p),
        p being the bottom of the ascending strip through the top of Des(w).
        The cells that were glued to those edges move onto the new strip.
        """
        q = self.top_of_descending(w)
        b = [self.bottom_of_ascending(q)]
        while b[-1] != q:
            b.append(self.ru[b[-1]])
        a = [self.lu[x] for x in b]
        c = [self.new_cell() for _ in b]
        for i, (bi, ci) in enumerate(zip(b, c)):
            self.glue_rl(ci, bi)
            if i + 1 < len(c):
                self.glue_ru(ci, c[i + 1])
            if a[i] is not None:
                self.glue_rl(a[i], ci)
        return c[-1]

    def add_south(self, w: int) -> int:
        """Mirror image of add_west along the left lower edges of Des(p)"""
        q = self.bottom_of_ascending(w)
        b = [self.top_of_descending(q)]
        while b[-1] != q:
            b.append(self.rl[b[-1]])
        a = [self.ll[x] for x in b]
        c = [self.new_cell() for _ in b]
        for i, (bi, ci) in enumerate(zip(b, c)):
            self.glue_ru(ci, bi)
            if i + 1 < len(c):
                self.glue_rl(ci, c[i + 1])
            if a[i] is not None:
                self.glue_ru(a[i], ci)
        return c[-1]

    def freeze(self) -> Fish:
        cells = tuple(
            Cell(lu=self.lu[i], ll=self.ll[i], ru=self.ru[i], rl=self.rl[i])
            for i in range(len(self.lu))
        )
        return Fish(cells, find_head(cells))


def grow(builder: FishBuilder, s: StemNode, free_root: bool = False) -> Dict[int, int]:
    """
    Add the cells of s to an empty builder, breadth first; returns id(node) -> cell.

    Each child adds one stem cell on the side of its parent named by its
    label. A child labelled opposite to its parent is refused, except at the
    root when free_root is set.
    """
    cell_of: Dict[int, int] = {id(s): builder.new_cell()}
    add = {
        Direction.N: builder.add_north,
        Direction.E: builder.add_east,
        Direction.W: builder.add_west,
        Direction.S: builder.add_south,
    }
    queue = deque([s])
    while queue:
        w = queue.popleft()
        for u in w.children:
            if u.label == OPPOSITE[w.label] and not (free_root and w is s):
                raise InconsistentLabels(
                    f"a {w.label.value} node cannot have a {u.label.value} child"
                )
            cell_of[id(u)] = add[u.label](cell_of[id(w)])
            queue.append(u)
    return cell_of


def construct(s: StemNode, free_root: bool = False) -> Tuple[Fish, StemNode]:
    """
    Build the fish of a labelled stem tree.

    Returns the fish (ids in creation order, root cell 0) and a copy of s
    annotated with the cell of every node.
    """
    builder = FishBuilder()
    cell_of = grow(builder, s, free_root)

    def annotate(node: StemNode) -> StemNode:
        return StemNode(node.label, tuple(annotate(c) for c in node.children), cell_of[id(node)])

    return builder.freeze(), annotate(s)


def build_fish(s: StemNode, free_root: bool = False) -> Fish:
    return construct(s, free_root)[0]
