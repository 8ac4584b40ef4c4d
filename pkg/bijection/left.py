"""
Left Tree Bijection
Left ternary trees of size n <-> fish of size n, with the odd/even node maps built on it
"""
from typing import Dict, List, Tuple

from bijection.construction import construct
from bijection.marked import MarkedFish, phi_inv
from fishcore.fish import Fish, Orientation, canonicalize, conjugate, jaw, strip_of
from ternary.labeling import Direction, stem_addresses, to_stem_tree
from ternary.tree import TernaryTree, Tree, address_abscissa, first_negative, subtree
from utils.errors import EmptyTree, FishBijError, NotLeftTree


def _require_left(t: Tree):
    if t is None:
        raise EmptyTree("left tree bijection needs a non-empty tree")
    witness = first_negative(t)
    if witness is not None:
        raise NotLeftTree(*witness)


def phi_left_cells(t: Tree) -> Tuple[Fish, Dict[str, int]]:
    """The fish of a left tree and the cell (canonical id) of every node address"""
    _require_left(t)
    raw, annotated = construct(to_stem_tree(t, Direction.E))
    fish, index = canonicalize(raw)
    cells = {addr: index[node.cell] for addr, node in stem_addresses(annotated).items()}
    return fish, cells


def phi_left(t: Tree) -> Fish:
    """For a left tree the marked strip is always the jaw, so only the fish is kept"""
    return phi_left_cells(t)[0]


def phi_left_inv(f: Fish) -> TernaryTree:
    return phi_inv(MarkedFish(f, jaw(f)))


def _node_cell(t: Tree, u: str) -> Tuple[Fish, int, int]:
    if subtree(t, u) is None:
        raise FishBijError(f"node '{u}' does not exist")
    fish, cells = phi_left_cells(t)
    return fish, cells[u], address_abscissa(u)


def _node_image(fish: Fish, cell: int, alpha: int) -> TernaryTree:
    if alpha % 2:
        return phi_inv(MarkedFish(fish, strip_of(fish, cell, Orientation.DESCENDING)))
    g = conjugate(fish)
    return phi_inv(MarkedFish(g, strip_of(g, cell, Orientation.DESCENDING)))


def node_images(t: Tree) -> List[Tuple[str, int, TernaryTree]]:
    """
    (address, abscissa, image) for every node u of a left tree.

    At odd abscissa u's cell is the only N or S stem cell of its descending
    strip, which is never the jaw; marking that strip and inverting gives a
    tree that is not a left tree. At even abscissa u's cell is the only E or W
    stem cell of its ascending strip, which is marked in the conjugate fish.
    """
    fish, cells = phi_left_cells(t)
    return [
        (addr, address_abscissa(addr), _node_image(fish, cell, address_abscissa(addr)))
        for addr, cell in sorted(cells.items())
    ]


def odd_node_tree(t: Tree, u: str) -> TernaryTree:
    """(t, u) with u at odd abscissa -> a ternary tree that is not a left tree"""
    fish, cell, alpha = _node_cell(t, u)
    if alpha % 2 == 0:
        raise FishBijError(f"node '{u}' has even abscissa {alpha}")
    return _node_image(fish, cell, alpha)


def even_node_tree(t: Tree, u: str) -> TernaryTree:
    """(t, u) with u at even abscissa -> a ternary tree"""
    fish, cell, alpha = _node_cell(t, u)
    if alpha % 2:
        raise FishBijError(f"node '{u}' has odd abscissa {alpha}")
    return _node_image(fish, cell, alpha)
