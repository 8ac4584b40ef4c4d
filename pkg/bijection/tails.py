"""
Tails Bijection
Fish of size n with a marked tail <-> ordered pairs of ternary trees with n-1 nodes
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from bijection.construction import construct
from bijection.stem_tree import stem_tree_from
from fishcore.fish import Fish, canonicalize, glue_upper, is_tail
from ternary.labeling import Direction, StemNode, order_children, to_stem_tree
from ternary.tree import Tree, tree_code, tree_size
from utils.errors import BadPairTotal, FishBijError, NotATail


@dataclass(frozen=True)
class TreePair:
    first: Tree = None
    second: Tree = None

    @property
    def total(self) -> int:
        return tree_size(self.first) + tree_size(self.second)

    def swapped(self) -> 'TreePair':
        return TreePair(self.second, self.first)

    def codes(self) -> Tuple[str, str]:
        return tree_code(self.first), tree_code(self.second)

    def require_total(self, n: int) -> 'TreePair':
        if self.total != n:
            raise BadPairTotal(f"pair has {self.total} nodes, expected {n}")
        return self


def _subtree(node: Optional[StemNode]) -> Tree:
    return None if node is None else order_children(node)


def tails_to_pair(f: Fish, t: int) -> TreePair:
    """
    Attach a cell p above the tail t and read the stem tree rooted at p.

    t is p's S child; its middle (S side) and right (W side) subtrees form
    the pair.
    """
    if not is_tail(f, t):
        raise NotATail(f"cell {t} has a glued right edge")
    grown = glue_upper(f, t)
    p = len(f.cells)
    root = stem_tree_from(grown, p, Direction.E)
    t_node = root.child(Direction.S)
    if t_node is None or t_node.cell != t:
        raise FishBijError(f"tail {t} is not below the attached cell")
    return TreePair(_subtree(t_node.child(Direction.S)), _subtree(t_node.child(Direction.W)))


def pair_to_tailed_fish(p: TreePair) -> Tuple[Fish, int]:
    """Root t labelled S over the first tree (S side) and the second (W side); returns canonical ids"""
    children = []
    if p.first is not None:
        children.append(to_stem_tree(p.first, Direction.S))
    if p.second is not None:
        children.append(to_stem_tree(p.second, Direction.W))
    raw, annotated = construct(StemNode(Direction.S, tuple(children)))
    fish, index = canonicalize(raw)
    return fish, index[annotated.cell]


def tailed_key(f: Fish, t: int) -> Tuple[bytes, int]:
    """Identity of a (fish, tail) pair independent of cell numbering"""
    _, index = canonicalize(f)
    return f.code, index[t]
