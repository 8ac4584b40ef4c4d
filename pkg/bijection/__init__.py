"""Bijections between fighting fish and ternary trees"""

from bijection.stem_tree import stem_neighbours, stem_tree, stem_tree_from
from bijection.construction import build_fish, construct
from bijection.marked import (
    MarkedFish,
    load_fish,
    mark_by_index,
    marked_fish,
    phi,
    phi_inv,
    two_to_n_plus_one,
)
from bijection.left import (
    even_node_tree,
    node_images,
    odd_node_tree,
    phi_left,
    phi_left_cells,
    phi_left_inv,
)
from bijection.tails import TreePair, pair_to_tailed_fish, tailed_key, tails_to_pair
from bijection.symmetric import (
    SymmetricAxis,
    has_odd_tails,
    pair_to_symmetric,
    symmetric_axis,
    symmetric_to_pair,
)
from bijection.base_bijection import BIJECTIONS, BaseBijection

__all__ = [
    'stem_neighbours', 'stem_tree', 'stem_tree_from', 'build_fish', 'construct',
    'MarkedFish', 'load_fish', 'mark_by_index', 'marked_fish', 'phi', 'phi_inv',
    'two_to_n_plus_one', 'even_node_tree', 'node_images', 'odd_node_tree', 'phi_left',
    'phi_left_cells', 'phi_left_inv', 'TreePair', 'pair_to_tailed_fish', 'tailed_key',
    'tails_to_pair', 'SymmetricAxis', 'has_odd_tails', 'pair_to_symmetric',
    'symmetric_axis', 'symmetric_to_pair', 'BIJECTIONS', 'BaseBijection',
]
