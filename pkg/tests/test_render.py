"""Tests for SVG rendering"""
import pytest
from lxml import etree

from bijection.left import phi_left
from enumeration.generators import gen_ternary
from render.svg import SVG_NS, render_fish, render_tree, tree_positions
from ternary.tree import LEAF, parse_tree
from utils.errors import EmptyTree

NS = {'svg': SVG_NS}


def test_head_is_one_diamond(head, render_style):
    root = etree.fromstring(render_fish(head, render_style))
    polygons = root.findall('.//svg:polygon', NS)
    assert len(polygons) == 1
    assert polygons[0].get('fill') == render_style['colors']['head']
    assert polygons[0].get('fill-opacity') == '0.4'


def test_stem_markers(render_style):
    f = phi_left(parse_tree('((..(...))(...).)'))
    root = etree.fromstring(render_fish(f, render_style))
    assert len(root.findall('.//svg:polygon', NS)) == len(f.cells)
    assert len(root.findall(".//svg:g[@id='stems']/svg:circle", NS)) == 4


def test_left_children_one_step_left(render_style):
    step = render_style['tree_step_x']
    for t in gen_ternary(3):
        positions = tree_positions(t, render_style)
        for addr, (x, y) in positions.items():
            if addr.endswith('l'):
                assert x == positions[addr[:-1]][0] - step
            elif addr.endswith('m'):
                assert x == positions[addr[:-1]][0]
            elif addr.endswith('r'):
                assert x == positions[addr[:-1]][0] + step


def test_tree_labels(render_style):
    root = etree.fromstring(render_tree(parse_tree('((...)..)'), render_style))
    assert [t.text for t in root.findall('.//svg:text', NS)] == ['E', 'N']
    bare = etree.fromstring(render_tree(LEAF, render_style, labels=False))
    assert bare.findall('.//svg:text', NS) == []


def test_empty_tree(render_style):
    with pytest.raises(EmptyTree):
        render_tree(None, render_style)
