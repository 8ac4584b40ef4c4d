"""
Direction Labelling
Compass labels on tree nodes and the unordered stem trees they describe
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, Optional, Tuple

from ternary.tree import SLOTS, TernaryTree, Tree, nodes
from utils.errors import EmptyTree, InconsistentLabels


class Direction(str, Enum):
    N = "N"
    E = "E"
    S = "S"
    W = "W"


OPPOSITE = {
    Direction.N: Direction.S,
    Direction.S: Direction.N,
    Direction.E: Direction.W,
    Direction.W: Direction.E,
}

# Reflection across the horizontal axis exchanges these labels
MIRROR = {
    Direction.S: Direction.W,
    Direction.W: Direction.S,
    Direction.E: Direction.N,
    Direction.N: Direction.E,
}

# parent label -> slot -> child label
SLOT_RULES: Dict[Direction, Dict[str, Direction]] = {
    Direction.E: {'l': Direction.N, 'm': Direction.E, 'r': Direction.S},
    Direction.N: {'l': Direction.E, 'm': Direction.N, 'r': Direction.W},
    Direction.W: {'l': Direction.N, 'm': Direction.W, 'r': Direction.S},
    Direction.S: {'l': Direction.E, 'm': Direction.S, 'r': Direction.W},
}

# parent label -> child label -> slot
LABEL_SLOTS: Dict[Direction, Dict[Direction, str]] = {
    parent: {label: slot for slot, label in rules.items()}
    for parent, rules in SLOT_RULES.items()
}

ORDER = (Direction.N, Direction.E, Direction.S, Direction.W)


@dataclass(frozen=True)
class StemNode:
    """
    Node of an unordered tree whose children carry pairwise distinct labels.

    `cell` is filled in when the tree was read off a fish or used to build one.
    """
    label: Direction
    children: Tuple['StemNode', ...] = ()
    cell: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        labels = [c.label for c in self.children]
        if len(set(labels)) != len(labels):
            raise InconsistentLabels(f"node {self.label.value} has two children with one label")

    def child(self, label: Direction) -> Optional['StemNode']:
        for c in self.children:
            if c.label == label:
                return c
        return None

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def walk(self) -> Iterator['StemNode']:
        stack = [self]
        while stack:
            current = stack.pop()
            yield current
            stack.extend(current.children)

    def shape(self) -> Tuple:
        """Order-free structural key: (label, sorted child shapes)"""
        return (self.label.value, tuple(sorted(c.shape() for c in self.children)))


def label_tree(t: Tree, root_label: Direction = Direction.E) -> Dict[str, Direction]:
    """Direction label of every node, keyed by address"""
    if t is None:
        raise EmptyTree("cannot label the empty tree")
    labels = {}
    for addr, _ in nodes(t):
        if not addr:
            labels[addr] = root_label
        else:
            labels[addr] = SLOT_RULES[labels[addr[:-1]]][addr[-1]]
    return labels


def to_stem_tree(t: Tree, root_label: Direction = Direction.E) -> StemNode:
    """Label t and forget the child order"""
    if t is None:
        raise EmptyTree("cannot label the empty tree")
    return _to_stem(t, root_label)


def _to_stem(t: TernaryTree, label: Direction) -> StemNode:
    rules = SLOT_RULES[label]
    children = tuple(_to_stem(sub, rules[slot]) for slot, sub in t.children())
    return StemNode(label, children)


def order_children(s: StemNode) -> TernaryTree:
    """
    Recover the ternary tree whose labelling gives s.

    Each child's slot is read off its own label relative to its parent's;
    a label the parent's rules do not produce raises InconsistentLabels.
    """
    slots = LABEL_SLOTS[s.label]
    placed = {}
    for c in s.children:
        slot = slots.get(c.label)
        if slot is None:
            raise InconsistentLabels(
                f"a {s.label.value} node cannot have a {c.label.value} child"
            )
        placed[slot] = order_children(c)
    return TernaryTree(placed.get('l'), placed.get('m'), placed.get('r'))


def stem_addresses(s: StemNode) -> Dict[str, StemNode]:
    """Address of every node of a consistently labelled stem tree"""
    result = {'': s}
    stack = [('', s)]
    while stack:
        addr, current = stack.pop()
        slots = LABEL_SLOTS[current.label]
        for c in current.children:
            if c.label not in slots:
                raise InconsistentLabels(
                    f"a {current.label.value} node cannot have a {c.label.value} child"
                )
            child_addr = addr + slots[c.label]
            result[child_addr] = c
            stack.append((child_addr, c))
    return result


def mirror(s: StemNode) -> StemNode:
    """Swap S with W and E with N throughout"""
    return StemNode(MIRROR[s.label], tuple(mirror(c) for c in s.children), s.cell)


__all__ = [
    'Direction', 'OPPOSITE', 'MIRROR', 'SLOT_RULES', 'LABEL_SLOTS', 'ORDER', 'SLOTS',
    'StemNode', 'label_tree', 'to_stem_tree', 'order_children', 'stem_addresses', 'mirror',
]
