"""
Ternary Trees
Plane ternary trees, abscissas, left trees and the parenthesis code
"""
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, Optional, Tuple, Union

from utils.errors import EmptyTree, ParseError

# Abscissa shift per slot
SLOT_SHIFT = {'l': 1, 'm': 0, 'r': -1}
SLOTS = ('l', 'm', 'r')


@dataclass(frozen=True)
class TernaryTree:
    """
    A non-empty node; each subtree is either another node or None (the empty tree).

    Nodes are addressed by strings over 'l', 'm', 'r' read from the root, the
    root itself being ''.
    """
    left: Optional['TernaryTree'] = None
    middle: Optional['TernaryTree'] = None
    right: Optional['TernaryTree'] = None

    @cached_property
    def size(self) -> int:
        return 1 + tree_size(self.left) + tree_size(self.middle) + tree_size(self.right)

    def child(self, slot: str) -> Optional['TernaryTree']:
        return {'l': self.left, 'm': self.middle, 'r': self.right}[slot]

    def children(self) -> Iterator[Tuple[str, 'TernaryTree']]:
        for slot in SLOTS:
            sub = self.child(slot)
            if sub is not None:
                yield slot, sub

    def __str__(self) -> str:
        return tree_code(self)


Tree = Optional[TernaryTree]

LEAF = TernaryTree()


def node(left: Tree = None, middle: Tree = None, right: Tree = None) -> TernaryTree:
    return TernaryTree(left, middle, right)


def tree_size(t: Tree) -> int:
    return 0 if t is None else t.size


def nodes(t: Tree, address: str = '') -> Iterator[Tuple[str, TernaryTree]]:
    """Pre-order (address, node) pairs"""
    if t is None:
        return
    stack = [(address, t)]
    while stack:
        addr, current = stack.pop()
        yield addr, current
        for slot in reversed(SLOTS):
            sub = current.child(slot)
            if sub is not None:
                stack.append((addr + slot, sub))


def subtree(t: Tree, address: str) -> Tree:
    current = t
    for slot in address:
        if current is None:
            return None
        current = current.child(slot)
    return current


# ---------------------------------------------------------------------------
# Abscissas
# ---------------------------------------------------------------------------

def abscissas(t: Tree) -> Dict[str, int]:
    """Abscissa of every node: root 0, left +1, middle +0, right -1"""
    if t is None:
        raise EmptyTree("abscissas of the empty tree are undefined")
    return {addr: address_abscissa(addr) for addr, _ in nodes(t)}


def address_abscissa(address: str) -> int:
    return sum(SLOT_SHIFT[slot] for slot in address)


def first_negative(t: Tree) -> Optional[Tuple[str, int]]:
    """The first node in pre-order with negative abscissa, if any"""
    if t is None:
        return None
    for addr, _ in nodes(t):
        alpha = address_abscissa(addr)
        if alpha < 0:
            return addr, alpha
    return None


def is_left_tree(t: Tree) -> bool:
    return first_negative(t) is None


def abscissa_counts(t: Tree) -> Tuple[int, int, int]:
    """(odd, even, zero) node counts"""
    odd = even = zero = 0
    for alpha in abscissas(t).values():
        if alpha % 2:
            odd += 1
        else:
            even += 1
        if alpha == 0:
            zero += 1
    return odd, even, zero


def core_size(t: Tree) -> int:
    """Nodes reachable from the root through left and middle edges only"""
    if t is None:
        raise EmptyTree("the empty tree has no core")
    count = 0
    stack = [t]
    while stack:
        current = stack.pop()
        count += 1
        for sub in (current.left, current.middle):
            if sub is not None:
                stack.append(sub)
    return count


def right_branch_count(t: Tree) -> int:
    """Number of right edges"""
    if t is None:
        raise EmptyTree("the empty tree has no edges")
    return sum(1 for _, n in nodes(t) if n.right is not None)


def right_path_count(t: Tree) -> int:
    """Number of maximal right branches: right edges whose parent is not itself a right child"""
    if t is None:
        raise EmptyTree("the empty tree has no edges")
    return sum(1 for addr, n in nodes(t) if n.right is not None and not addr.endswith('r'))


# ---------------------------------------------------------------------------
# Codes
# ---------------------------------------------------------------------------

def tree_code(t: Tree) -> str:
    """'.' for the empty tree, '(' L M R ')' for a node"""
    if t is None:
        return '.'
    parts = []
    stack = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif item is None:
            parts.append('.')
        else:
            parts.append('(')
            stack.append(')')
            stack.extend((item.right, item.middle, item.left))
    return ''.join(parts)


def parse_tree(code: str) -> Tree:
    """Inverse of tree_code; raises ParseError naming the offending position"""
    if not isinstance(code, str):
        raise ParseError("tree code must be a string")
    code = code.strip()
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(code):
            raise ParseError("unexpected end of tree code", pos)
        ch = code[pos]
        if ch == '.':
            pos += 1
            return None
        if ch != '(':
            raise ParseError(f"unexpected character {ch!r} in tree code", pos)
        pos += 1
        left = parse()
        middle = parse()
        right = parse()
        if pos >= len(code) or code[pos] != ')':
            raise ParseError("expected ')' in tree code", pos)
        pos += 1
        return TernaryTree(left, middle, right)

    try:
        t = parse()
    except RecursionError:
        raise ParseError("tree code nests too deeply", pos)
    if pos != len(code):
        raise ParseError("trailing characters after tree code", pos)
    return t


JSON_KEYS = ('left', 'middle', 'right')


def tree_to_json(t: Tree):
    """Nested {"left", "middle", "right"} objects, null for the empty tree"""
    if t is None:
        return None
    return {
        'left': tree_to_json(t.left),
        'middle': tree_to_json(t.middle),
        'right': tree_to_json(t.right),
    }


def tree_from_json(data: Union[str, Dict, None]) -> Tree:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid tree JSON: {e.msg}", e.pos)
    return _tree_from_obj(data)


def _tree_from_obj(data) -> Tree:
    if data is None:
        return None
    if not isinstance(data, dict) or set(data) - set(JSON_KEYS):
        raise ParseError("tree JSON nodes must be objects with keys 'left', 'middle', 'right'")
    return TernaryTree(*(_tree_from_obj(data.get(key)) for key in JSON_KEYS))
