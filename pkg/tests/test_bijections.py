"""Tests for the marked, left-tree, tails and symmetric bijections"""
import pytest

from bijection.base_bijection import BIJECTIONS
from bijection.left import even_node_tree, node_images, odd_node_tree, phi_left, phi_left_cells, phi_left_inv
from bijection.marked import (
    MarkedFish,
    load_fish,
    mark_by_index,
    marked_fish,
    phi,
    phi_inv,
    two_to_n_plus_one,
)
from bijection.symmetric import has_odd_tails, pair_to_symmetric, symmetric_axis, symmetric_to_pair
from bijection.tails import TreePair, pair_to_tailed_fish, tails_to_pair
from enumeration.generators import gen_fish, gen_ternary
from fishcore.fish import (
    Orientation,
    StripRef,
    conjugate,
    conjugate_cell,
    fish_to_json,
    growth_script,
    jaw,
    new_head,
    size,
    strips,
    tails,
)
from ternary.tree import LEAF, is_left_tree, parse_tree, tree_size
from utils.errors import (
    BadPairTotal,
    BadStripIndex,
    FishBijError,
    NotATail,
    NotLeftTree,
    NotSymmetric,
    ParseError,
)


class TestMarked:
    def test_single_node(self, head):
        m = phi(LEAF)
        assert m.fish == head
        assert m.strip_index == 0

    def test_right_child(self, up_fish):
        m = phi(parse_tree('(..(...))'))
        assert m.fish == up_fish
        assert m.strip_index == 1

    def test_sample_tree(self, sample_tree):
        m = phi(sample_tree)
        assert size(m.fish) == 11
        assert len(strips(m.fish, Orientation.DESCENDING)) == 7
        assert len(strips(m.fish, Orientation.ASCENDING)) == 5
        assert phi_inv(m) == sample_tree

    def test_round_trips_for_small_trees(self):
        for n in range(1, 5):
            for t in gen_ternary(n):
                assert phi_inv(phi(t)) == t

    def test_mark_by_index(self, up_fish):
        assert mark_by_index(up_fish, 1).mark.cells == (1,)
        with pytest.raises(BadStripIndex):
            mark_by_index(up_fish, 2)

    def test_mark_must_be_maximal(self, down_fish):
        strip = jaw(down_fish)
        with pytest.raises(BadStripIndex):
            MarkedFish(down_fish, StripRef(strip.orientation, (0,)))

    def test_marked_equality(self, up_fish):
        assert marked_fish(up_fish)[1] == mark_by_index(up_fish, 1)
        assert len(set(marked_fish(up_fish))) == 2

    def test_two_to_n_plus_one(self):
        for n in range(1, 5):
            for f in gen_fish(n):
                from_desc, from_asc = two_to_n_plus_one(f)
                assert len(from_desc) + len(from_asc) == n + 1
                assert all(tree_size(t) == n for t in from_desc + from_asc)


class TestLoadFish:
    def test_accepts_fish(self, diamond):
        assert load_fish(fish_to_json(diamond)) == diamond

    def test_rejects_malformed(self):
        with pytest.raises(ParseError):
            load_fish('{"cells": 3}')


class TestLeft:
    def test_head(self, head):
        assert phi_left(LEAF) == head
        assert phi_left_inv(head) == LEAF

    def test_diamond(self, diamond):
        t = parse_tree('((..(...))..)')
        assert phi_left(t) == diamond
        assert phi_left_inv(diamond) == t

    def test_not_left(self):
        with pytest.raises(NotLeftTree) as info:
            phi_left(parse_tree('(..(...))'))
        assert info.value.node == 'r'
        assert info.value.abscissa == -1
        assert "'r'" in str(info.value)

    def test_cells_are_canonical_ids(self):
        f, cells = phi_left_cells(parse_tree('((...)..)'))
        assert cells == {'': 0, 'l': 1}
        assert f.cells[0].ru == 1

    def test_jaw_is_the_mark(self):
        for f in gen_fish(4):
            assert phi(phi_left_inv(f)).mark == jaw(f)

    def test_odd_node(self):
        t = parse_tree('((...)..)')
        image = odd_node_tree(t, 'l')
        assert tree_size(image) == 2
        assert not is_left_tree(image)
        with pytest.raises(FishBijError):
            odd_node_tree(t, '')

    def test_even_node(self):
        t = parse_tree('((...)..)')
        assert tree_size(even_node_tree(t, '')) == 2
        with pytest.raises(FishBijError):
            even_node_tree(t, 'l')
        with pytest.raises(FishBijError):
            even_node_tree(t, 'm')

    def test_node_images_cover_every_node(self):
        t = parse_tree('((...)(...).)')
        images = node_images(t)
        assert [addr for addr, _, _ in images] == ['', 'l', 'm']
        assert [alpha for _, alpha, _ in images] == [0, 1, 0]


class TestTails:
    def test_head(self, head):
        assert tails_to_pair(head, 0) == TreePair(None, None)
        assert pair_to_tailed_fish(TreePair()) == (head, 0)

    def test_not_a_tail(self, up_fish):
        with pytest.raises(NotATail):
            tails_to_pair(up_fish, 0)

    def test_round_trip(self):
        for pair in (TreePair(None, LEAF), TreePair(LEAF, None), TreePair(LEAF, LEAF)):
            f, t = pair_to_tailed_fish(pair)
            assert size(f) == pair.total + 1
            assert tails_to_pair(f, t) == pair

    def test_conjugation_swaps_the_pair(self, up_fish):
        pair = tails_to_pair(up_fish, 1)
        assert pair.total == 1
        assert tails_to_pair(conjugate(up_fish), conjugate_cell(up_fish, 1)) == pair.swapped()
        assert pair != pair.swapped()

    def test_every_tail_of_small_fish(self):
        for n in range(1, 5):
            for f in gen_fish(n):
                for t in tails(f):
                    pair = tails_to_pair(f, t)
                    assert pair.total == n - 1
                    g, u = pair_to_tailed_fish(pair)
                    assert g == f
                    assert tails_to_pair(g, u) == pair

    def test_require_total(self):
        with pytest.raises(BadPairTotal):
            TreePair(LEAF, None).require_total(2)
        assert TreePair(LEAF, LEAF).codes() == ('(...)', '(...)')


class TestSymmetric:
    def test_head(self, head):
        assert symmetric_to_pair(head) == TreePair(None, None)
        assert pair_to_symmetric(TreePair()) == head

    def test_size_three(self, v_fish, diamond):
        assert symmetric_to_pair(v_fish) == TreePair(None, LEAF)
        assert symmetric_to_pair(diamond) == TreePair(LEAF, None)
        assert pair_to_symmetric(TreePair(None, LEAF)) == v_fish
        assert pair_to_symmetric(TreePair(LEAF, None)) == diamond

    def test_axis(self, v_fish, diamond):
        assert symmetric_axis(diamond).cells == (0, 3)
        assert symmetric_axis(v_fish).terminal == 0
        assert has_odd_tails(diamond)
        assert not has_odd_tails(v_fish)

    def test_not_symmetric(self, up_fish):
        with pytest.raises(NotSymmetric):
            symmetric_to_pair(up_fish)

    def test_size_five(self):
        pair = TreePair(LEAF, LEAF)
        f = pair_to_symmetric(pair, 2)
        assert size(f) == 5
        assert symmetric_to_pair(f) == pair
        with pytest.raises(BadPairTotal):
            pair_to_symmetric(pair, 3)


@pytest.mark.parametrize('name', list(BIJECTIONS))
def test_registry_round_trips(name):
    bijection = BIJECTIONS[name]()
    for n in range(1, 4):
        checked, failures = bijection.check_tree_round_trips(n)
        assert checked > 0
        assert failures == []
        _, failures = bijection.check_fish_round_trips(n)
        assert failures == []
        trees, image, fish_side = bijection.image_counts(n)
        assert trees == image == fish_side


def test_head_is_its_own_everything():
    f = new_head()
    assert phi_left(phi_left_inv(f)) == f
    assert load_fish(fish_to_json(growth_script([]))) == f
