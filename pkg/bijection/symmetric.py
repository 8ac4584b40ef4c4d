"""
Symmetric Fish Bijection
Symmetric fish of size 2n+1 <-> ordered pairs of ternary trees with n nodes
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from bijection.construction import construct
from bijection.stem_tree import stem_tree_from
from bijection.tails import TreePair, pair_to_tailed_fish, tails_to_pair
from fishcore.fish import Fish, canonicalize, is_symmetric, is_tail, size
from ternary.labeling import Direction, StemNode, order_children, to_stem_tree
from utils.errors import FishBijError, NotSymmetric

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymmetricAxis:
    """Cells met walking from the head through closed diamonds; the last one is the terminal cell"""
    cells: Tuple[int, ...]

    @property
    def terminal(self) -> int:
        return self.cells[-1]


def symmetric_axis(f: Fish) -> SymmetricAxis:
    """
    Walk from the head while the upper and lower right neighbours of the
    current cell meet in one cell; that cell is the next one on the axis.
    """
    cells = [f.head]
    current = f.cells[f.head]
    while current.ru is not None and current.rl is not None:
        beyond = f.cells[current.ru].rl
        if beyond is None or beyond != f.cells[current.rl].ru:
            break
        cells.append(beyond)
        current = f.cells[beyond]
    return SymmetricAxis(tuple(cells))


def has_odd_tails(f: Fish) -> bool:
    """For symmetric fish: the axis ends in a tail exactly when the tail count is odd"""
    return is_tail(f, symmetric_axis(f).terminal)


def symmetric_to_pair(f: Fish) -> TreePair:
    """
    Odd number of tails: the axis ends in a tail t whose pair is (T, T); return (T, empty).
    Even number: the axis ends in a branch cell t; root the stem tree at t
    labelled S and return its S side and E side subtrees.
    """
    if not is_symmetric(f):
        raise NotSymmetric("fish differs from its conjugate")
    t = symmetric_axis(f).terminal
    if is_tail(f, t):
        pair = tails_to_pair(f, t)
        if pair.first != pair.second:
            raise FishBijError("tail on the symmetry axis gave two different trees")
        return TreePair(pair.first, None)

    root = stem_tree_from(f, t, Direction.S)
    east = root.child(Direction.E)
    if east is None:
        raise FishBijError("terminal branch cell has nothing on its E side")
    south = root.child(Direction.S)
    return TreePair(None if south is None else order_children(south), order_children(east))


def pair_to_symmetric(p: TreePair, n: Optional[int] = None) -> Fish:
    """
    Inverse of symmetric_to_pair, returning canonical ids.

    With an empty second tree this is the tails construction applied to
    (T, T). Otherwise the root t (S) gets the first tree on its S and W sides
    and the second on its E and N sides; the W and N copies are the mirror
    images of the S and E ones.
    """
    if n is not None:
        p.require_total(n)
    if p.second is None:
        fish, _ = pair_to_tailed_fish(TreePair(p.first, p.first))
        return fish

    children = [
        to_stem_tree(p.second, Direction.E),
        to_stem_tree(p.second, Direction.N),
    ]
    if p.first is not None:
        children.append(to_stem_tree(p.first, Direction.S))
        children.append(to_stem_tree(p.first, Direction.W))
    raw, _ = construct(StemNode(Direction.S, tuple(children)), free_root=True)
    fish, _ = canonicalize(raw)
    logger.debug(f"Built symmetric fish of size {size(fish)}")
    return fish
