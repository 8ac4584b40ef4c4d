"""Tests for fish growth, strips, stem cells, conjugation and canonical codes"""
import json
import random

import pytest

from enumeration.generators import gen_fish
from fishcore.fish import (
    Cell,
    Fish,
    Orientation,
    StemKind,
    branch_cells,
    canonical_code,
    canonicalize,
    cell_at_path,
    cell_coords,
    conjugate,
    conjugate_cell,
    decode,
    double_sites,
    fish_from_json,
    fish_to_json,
    glue_double,
    glue_lower,
    glue_upper,
    growth_script,
    is_branch,
    is_symmetric,
    jaw,
    size,
    stem_cells,
    strip_of,
    strips,
    tails,
)
from utils.errors import BadCell, EdgeOccupied, NotDoubleSite, ParseError


def relabel(f: Fish, seed: int) -> Fish:
    """Same complex with cell ids shuffled"""
    order = list(range(len(f.cells)))
    random.Random(seed).shuffle(order)
    new_id = {old: new for new, old in enumerate(order)}

    def m(c):
        return None if c is None else new_id[c]

    cells = [None] * len(f.cells)
    for old, cell in enumerate(f.cells):
        cells[new_id[old]] = Cell(lu=m(cell.lu), ll=m(cell.ll), ru=m(cell.ru), rl=m(cell.rl))
    return Fish(tuple(cells), new_id[f.head])


class TestGrowth:
    def test_head(self, head):
        assert size(head) == 1
        assert tails(head) == [0]
        assert stem_cells(head) == {0: StemKind.TAIL}

    def test_upper_and_lower_gluings_add_one(self, up_fish, down_fish):
        assert size(up_fish) == 2
        assert size(down_fish) == 2
        assert up_fish.cells[0].ru == 1 and up_fish.cells[1].ll == 0
        assert down_fish.cells[0].rl == 1 and down_fish.cells[1].lu == 0

    def test_double_gluing_keeps_size(self, v_fish, diamond):
        assert size(v_fish) == 3
        assert size(diamond) == 3
        assert diamond.cells[3].lu == 1 and diamond.cells[3].ll == 2

    def test_occupied_edge(self, up_fish):
        with pytest.raises(EdgeOccupied):
            glue_upper(up_fish, 0)

    def test_bad_cell(self, head):
        with pytest.raises(BadCell):
            glue_lower(head, 3)

    def test_not_a_double_site(self, up_fish):
        with pytest.raises(NotDoubleSite):
            glue_double(up_fish, 1, 1)

    def test_double_sites(self, v_fish, diamond):
        assert double_sites(v_fish) == [(1, 2)]
        assert double_sites(diamond) == []

    def test_unknown_script_step(self):
        with pytest.raises(ParseError):
            growth_script([('sideways', 0)])

    def test_growth_order_does_not_matter(self):
        a = growth_script([('up', 0), ('down', 0)])
        b = growth_script([('down', 0), ('up', 0)])
        assert a.cells != b.cells
        assert a == b
        assert hash(a) == hash(b)


class TestStrips:
    def test_up_fish(self, up_fish):
        assert [s.cells for s in strips(up_fish, Orientation.DESCENDING)] == [(0,), (1,)]
        assert [s.cells for s in strips(up_fish, Orientation.ASCENDING)] == [(0, 1)]
        assert jaw(up_fish).cells == (0,)

    def test_down_fish(self, down_fish):
        assert jaw(down_fish).cells == (0, 1)
        assert strip_of(down_fish, 1, Orientation.DESCENDING).cells == (0, 1)
        assert len(strips(down_fish, Orientation.ASCENDING)) == 2

    def test_strips_partition_the_cells(self, diamond):
        for orientation in Orientation:
            cells = [c for s in strips(diamond, orientation) for c in s.cells]
            assert sorted(cells) == list(range(len(diamond.cells)))


class TestStemCells:
    def test_v_fish_has_a_branch(self, v_fish):
        assert is_branch(v_fish, 0)
        assert stem_cells(v_fish) == {0: StemKind.BRANCH, 1: StemKind.TAIL, 2: StemKind.TAIL}

    def test_closed_diamond_is_not_a_branch(self, diamond):
        assert branch_cells(diamond) == []
        assert stem_cells(diamond) == {
            1: StemKind.ONE_FREE, 2: StemKind.ONE_FREE, 3: StemKind.TAIL,
        }

    def test_upper_gluing_on_lower_tail(self):
        # the head keeps a branch point once the lower tail grows upwards
        f = growth_script([('up', 0), ('down', 0), ('up', 2)])
        assert is_branch(f, 0)
        assert len(stem_cells(f)) == size(f)
        assert len(branch_cells(f)) == len(tails(f)) - 1


class TestConjugation:
    def test_swaps_up_and_down(self, up_fish, down_fish):
        assert conjugate(up_fish) == down_fish
        assert conjugate_cell(up_fish, 1) == 1

    def test_conjugate_cell_is_the_reflection(self, diamond):
        g = conjugate(diamond)
        for c, cell in enumerate(diamond.cells):
            reflected = g.cells[conjugate_cell(diamond, c)]
            assert (reflected.ru, reflected.rl) == (cell.rl, cell.ru)
            assert (reflected.lu, reflected.ll) == (cell.ll, cell.lu)
        with pytest.raises(BadCell):
            conjugate_cell(diamond, len(diamond.cells))

    def test_involution(self, diamond):
        assert conjugate(conjugate(diamond)).code == diamond.code

    def test_symmetric(self, head, v_fish, diamond, up_fish):
        assert is_symmetric(head)
        assert is_symmetric(v_fish)
        assert is_symmetric(diamond)
        assert not is_symmetric(up_fish)


class TestCanonicalCode:
    def test_head_code(self, head):
        assert canonical_code(head) == b'fishbij/1:[[null,null,null,null]]'

    def test_independent_of_numbering(self, diamond):
        for seed in range(5):
            assert relabel(diamond, seed).code == diamond.code

    def test_decode(self, diamond):
        assert decode(diamond.code) == diamond
        assert decode(diamond.code).head == 0

    def test_bad_prefix(self):
        with pytest.raises(ParseError):
            decode(b'other:[]')

    def test_canonicalize_puts_head_first(self):
        f = relabel(growth_script([('down', 0), ('down', 1)]), 3)
        canon, index = canonicalize(f)
        assert canon.head == 0
        assert index[f.head] == 0


class TestJson:
    def test_round_trip(self, diamond):
        data = fish_to_json(diamond)
        assert fish_from_json(json.dumps(data)) == diamond

    def test_mismatched_gluing(self):
        data = {'cells': [{'ru': 1}, {}]}
        with pytest.raises(ParseError):
            fish_from_json(data)

    def test_invalid_json(self):
        with pytest.raises(ParseError):
            fish_from_json('{"cells": [')

    def test_out_of_range_reference(self):
        with pytest.raises(ParseError):
            fish_from_json({'cells': [{'ru': 7}]})

    def test_empty(self):
        with pytest.raises(ParseError):
            fish_from_json({'cells': []})


class TestCoordinates:
    def test_up_fish(self, up_fish):
        coords = cell_coords(up_fish)
        assert (coords[1].u, coords[1].v) == (0, 1)
        assert (coords[1].x, coords[1].y) == (1, 1)

    def test_diamond_closes(self, diamond):
        coords = cell_coords(diamond)
        assert (coords[3].x, coords[3].y) == (2, 0)

    def test_cell_at_path(self, diamond):
        assert cell_at_path(diamond, ['ru', 'rl']) == 3
        assert cell_at_path(diamond, ['rl', 'ru']) == 3
        with pytest.raises(BadCell):
            cell_at_path(diamond, ['ru', 'ru'])


def test_vertical_strip():
    for n in range(1, 6):
        f = growth_script([('up', c) for c in range(n - 1)])
        assert [len(s) for s in strips(f, Orientation.ASCENDING)] == [n]
        assert len(strips(f, Orientation.DESCENDING)) == n
        assert conjugate(f) == growth_script([('down', c) for c in range(n - 1)])


def test_conjugation_exchanges_strips():
    for f in gen_fish(5):
        g = conjugate(f)
        assert len(strips(g, Orientation.ASCENDING)) == len(strips(f, Orientation.DESCENDING))
        assert len(tails(g)) == len(tails(f))
        assert len(branch_cells(g)) == len(branch_cells(f))
