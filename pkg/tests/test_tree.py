"""Tests for ternary trees, abscissas and tree codes"""
import pytest

from ternary.tree import (
    LEAF,
    TernaryTree,
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
    subtree,
    tree_code,
    tree_from_json,
    tree_size,
    tree_to_json,
)
from utils.errors import EmptyTree, ParseError


class TestCodes:
    def test_empty_and_leaf(self):
        assert tree_code(None) == '.'
        assert tree_code(LEAF) == '(...)'
        assert parse_tree('.') is None
        assert parse_tree('(...)') == LEAF

    def test_round_trip(self, sample_code):
        t = parse_tree(sample_code)
        assert tree_code(t) == sample_code
        assert tree_size(t) == 11

    def test_whitespace_is_stripped(self):
        assert parse_tree('  (...)\n') == LEAF

    @pytest.mark.parametrize('code, position', [
        ('(..)', 3),
        ('(...)x', 5),
        ('', 0),
        ('(.x.)', 2),
    ])
    def test_errors_name_the_position(self, code, position):
        with pytest.raises(ParseError) as info:
            parse_tree(code)
        assert info.value.position == position

    def test_json(self):
        t = node(left=LEAF)
        data = tree_to_json(t)
        assert data == {'left': {'left': None, 'middle': None, 'right': None},
                        'middle': None, 'right': None}
        assert tree_from_json(data) == t
        assert tree_from_json('null') is None

    def test_json_rejects_unknown_keys(self):
        with pytest.raises(ParseError):
            tree_from_json({'l': None})


class TestTraversal:
    def test_preorder_addresses(self):
        t = node(LEAF, node(right=LEAF), LEAF)
        assert [addr for addr, _ in nodes(t)] == ['', 'l', 'm', 'mr', 'r']

    def test_subtree(self, sample_tree):
        assert tree_code(subtree(sample_tree, 'lr')) == '(..(...))'
        assert subtree(sample_tree, 'rrr') is None


class TestAbscissas:
    def test_values(self, sample_tree):
        alpha = abscissas(sample_tree)
        assert alpha[''] == 0
        assert alpha['l'] == 1
        assert alpha['ll'] == 2
        assert alpha['r'] == -1
        assert alpha['lrr'] == -1

    def test_counts(self, sample_tree):
        assert abscissa_counts(sample_tree) == (6, 5, 4)

    def test_left_trees(self, sample_tree):
        assert not is_left_tree(sample_tree)
        assert first_negative(sample_tree) == ('lrr', -1)
        assert is_left_tree(node(LEAF, LEAF))
        assert first_negative(node(right=LEAF)) == ('r', -1)

    def test_empty(self):
        with pytest.raises(EmptyTree):
            abscissas(None)
        assert is_left_tree(None)


class TestStatistics:
    def test_core_size(self, sample_tree):
        assert core_size(sample_tree) == 5
        assert core_size(LEAF) == 1
        assert core_size(node(right=LEAF)) == 1

    def test_right_branches(self, sample_tree):
        assert right_branch_count(sample_tree) == 5
        assert right_branch_count(LEAF) == 0

    def test_right_paths(self, sample_tree):
        assert right_path_count(sample_tree) == 3
        assert right_path_count(LEAF) == 0
        right_comb = node(right=node(right=node(right=LEAF)))
        assert right_branch_count(right_comb) == 3
        assert right_path_count(right_comb) == 1
        with pytest.raises(EmptyTree):
            right_path_count(None)

    def test_empty(self):
        with pytest.raises(EmptyTree):
            core_size(None)
        with pytest.raises(EmptyTree):
            right_branch_count(None)

    def test_size_is_cached_per_node(self):
        t = TernaryTree(LEAF, LEAF, None)
        assert t.size == 3


def test_left_comb_core():
    t = LEAF
    for n in range(2, 7):
        t = node(left=t)
        assert core_size(t) == n
        assert right_branch_count(t) == 0
