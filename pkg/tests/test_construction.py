"""Tests for building fish from stem trees and reading stem trees back"""
import pytest

from bijection.construction import FishBuilder, build_fish, construct, grow
from bijection.stem_tree import stem_neighbours, stem_tree, stem_tree_from
from fishcore.fish import Orientation, StemKind, growth_script, jaw, new_head, size, stem_cells, strip_of
from enumeration.generators import gen_ternary
from ternary.labeling import Direction, StemNode, to_stem_tree
from ternary.tree import parse_tree
from utils.errors import FishBijError, InconsistentLabels

N, E, S, W = Direction.N, Direction.E, Direction.S, Direction.W


def reversed_children(s: StemNode) -> StemNode:
    return StemNode(s.label, tuple(reversed([reversed_children(c) for c in s.children])))


class TestConstruct:
    def test_single_node_is_the_head(self):
        assert build_fish(StemNode(E)) == new_head()

    def test_north_and_east(self, up_fish, down_fish):
        assert build_fish(StemNode(E, (StemNode(N),))) == up_fish
        assert build_fish(StemNode(E, (StemNode(E),))) == down_fish

    def test_south_moves_the_head(self, up_fish):
        f, annotated = construct(StemNode(E, (StemNode(S),)))
        assert f == up_fish
        assert annotated.cell == 0
        assert f.head == annotated.children[0].cell

    def test_west_of_a_north_node(self, diamond):
        # N then its W child: a new ascending strip slides in on the left
        f = build_fish(StemNode(E, (StemNode(N, (StemNode(W),)),)))
        assert f == diamond

    def test_opposite_child_refused(self):
        with pytest.raises(InconsistentLabels):
            construct(StemNode(E, (StemNode(W),)))

    def test_free_root_allows_all_four_sides(self):
        s = StemNode(S, (StemNode(E), StemNode(N), StemNode(S), StemNode(W)))
        f = build_fish(s, free_root=True)
        assert size(f) == 5

    def test_sibling_order_does_not_matter(self, sample_tree):
        s = to_stem_tree(sample_tree)
        assert build_fish(s) == build_fish(reversed_children(s))

    def test_symmetric_siblings(self):
        a = StemNode(E, (StemNode(N), StemNode(S)))
        b = StemNode(E, (StemNode(S), StemNode(N)))
        assert build_fish(a) == build_fish(b)

    def test_annotation_covers_every_node(self, sample_tree):
        f, annotated = construct(to_stem_tree(sample_tree))
        cells = [n.cell for n in annotated.walk()]
        assert sorted(cells) == sorted(set(cells))
        assert set(cells) == set(stem_cells(f))


class TestBuilder:
    def test_strip_walks(self):
        b = FishBuilder()
        top = b.new_cell()
        below = b.add_east(top)
        above = b.add_north(below)
        assert b.top_of_descending(below) == top
        assert b.bottom_of_ascending(above) == below

    def test_occupied_side(self):
        b = FishBuilder()
        root = b.new_cell()
        b.add_north(root)
        with pytest.raises(InconsistentLabels):
            b.add_north(root)

    def test_strip_index_matches_pointer_walks(self):
        for n in range(1, 6):
            for t in gen_ternary(n):
                b = FishBuilder()
                grow(b, to_stem_tree(t))
                for c in range(len(b.lu)):
                    top = c
                    while b.lu[top] is not None:
                        top = b.lu[top]
                    bottom = c
                    while b.ll[bottom] is not None:
                        bottom = b.ll[bottom]
                    assert b.top_of_descending(c) == top
                    assert b.bottom_of_ascending(c) == bottom

    def test_west_strip_becomes_the_new_top(self):
        b = FishBuilder()
        root = b.new_cell()
        b.add_north(root)
        west = b.add_west(root)
        assert b.top_of_descending(root) == b.top_of_descending(west)
        assert b.lu[root] is not None
        assert b.top_of_descending(root) == b.lu[root]


class TestStemTree:
    def test_head(self, head):
        s = stem_tree_from(head, 0)
        assert s.label == E and s.children == () and s.cell == 0

    def test_neighbours_of_v_fish(self, v_fish):
        neighbours = stem_neighbours(v_fish)
        assert neighbours[0] == {N: 1, E: 2}
        assert neighbours[1] == {S: 0}

    def test_not_a_stem_cell(self, diamond):
        with pytest.raises(FishBijError):
            stem_tree_from(diamond, 0)

    def test_reads_back_what_was_built(self, sample_tree):
        s = to_stem_tree(sample_tree)
        f, annotated = construct(s)
        read = stem_tree(f, strip_of(f, annotated.cell, Orientation.DESCENDING))
        assert read.shape() == s.shape()

    def test_from_marked_strip(self):
        f = growth_script([('down', 0), ('up', 1)])
        s = stem_tree(f, jaw(f))
        assert s.cell == 0
        assert stem_cells(f)[0] is StemKind.ONE_FREE
        assert s.size == size(f)

    def test_root_label(self, v_fish):
        s = stem_tree_from(v_fish, 1, S)
        assert s.label == S
        assert [c.label for c in s.children] == [S]
