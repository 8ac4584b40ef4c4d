"""
Stem Tree Extraction
Reads the labelled tree of stem cells off a fish
"""
from typing import Dict, Optional

from fishcore.fish import Fish, Orientation, StripRef, stem_cells, strips
from ternary.labeling import ORDER, Direction, StemNode
from utils.errors import FishBijError

Neighbours = Dict[int, Dict[Direction, int]]


def stem_neighbours(f: Fish) -> Neighbours:
    """
    Adjacent stem cells by compass side.

    Two stem cells are adjacent when they are consecutive among the stem cells
    of one strip. Along a descending strip the lower one is on the E side of
    the upper one; along an ascending strip the upper one is on the N side.
    """
    stems = stem_cells(f)
    neighbours: Neighbours = {c: {} for c in stems}
    for strip in strips(f, Orientation.DESCENDING):
        chain = [c for c in strip.cells if c in stems]
        for upper, lower in zip(chain, chain[1:]):
            neighbours[upper][Direction.E] = lower
            neighbours[lower][Direction.W] = upper
    for strip in strips(f, Orientation.ASCENDING):
        chain = [c for c in strip.cells if c in stems]
        for lower, upper in zip(chain, chain[1:]):
            neighbours[lower][Direction.N] = upper
            neighbours[upper][Direction.S] = lower
    return neighbours


def stem_tree_from(f: Fish, root: int, root_label: Direction = Direction.E,
                   neighbours: Optional[Neighbours] = None) -> StemNode:
    """
    Stem tree rooted at any stem cell.

    Every neighbour of the root becomes a child; below the root a node's
    children are its neighbours other than its parent, each labelled by the
    side of the node it sits on.
    """
    if neighbours is None:
        neighbours = stem_neighbours(f)
    if root not in neighbours:
        raise FishBijError(f"cell {root} is not a stem cell")

    def build(cell: int, label: Direction, parent: Optional[int]) -> StemNode:
        kids = []
        for side in ORDER:
            nb = neighbours[cell].get(side)
            if nb is None or nb == parent:
                continue
            kids.append(build(nb, side, cell))
        return StemNode(label, tuple(kids), cell)

    return build(root, root_label, None)


def stem_tree(f: Fish, mark: StripRef) -> StemNode:
    """Stem tree rooted at the topmost stem cell of a marked descending strip, labelled E"""
    if mark.orientation is not Orientation.DESCENDING:
        raise FishBijError("the marked strip must be descending")
    stems = stem_cells(f)
    for c in mark.cells:
        if c in stems:
            return stem_tree_from(f, c, Direction.E)
    raise FishBijError("marked strip has no stem cell")
