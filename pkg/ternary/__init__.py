"""Ternary trees and their direction labels"""
from ternary.tree import (
    LEAF,
    TernaryTree,
    Tree,
    abscissa_counts,
    abscissas,
    core_size,
    first_negative,
    is_left_tree,
    node,
    nodes,
    parse_tree,
    right_branch_count,
    right_path_count,
    tree_code,
    tree_from_json,
    tree_size,
    tree_to_json,
)
from ternary.labeling import (
    Direction,
    StemNode,
    label_tree,
    order_children,
    stem_addresses,
    to_stem_tree,
)

__all__ = [
    'LEAF', 'TernaryTree', 'Tree', 'abscissa_counts', 'abscissas', 'core_size',
    'first_negative', 'is_left_tree', 'node', 'nodes', 'parse_tree',
    'right_branch_count', 'right_path_count', 'tree_code', 'tree_from_json', 'tree_size', 'tree_to_json',
    'Direction', 'StemNode', 'label_tree', 'order_children', 'stem_addresses', 'to_stem_tree',
]
