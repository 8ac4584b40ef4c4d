"""Shared fixtures: small fish built by growth scripts and the render style"""
import sys
from pathlib import Path

import pytest

# Add the repository root to the path to enable imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import load_settings
from fishcore.fish import growth_script, new_head
from ternary.tree import parse_tree

# A tree with 11 nodes: 6 at odd abscissa, 5 at even abscissa, one of them at -1
SAMPLE_TREE_CODE = "(((..(.(...)(...)))(...)(..(...)))(...)(...))"


@pytest.fixture
def head():
    return new_head()


@pytest.fixture
def up_fish():
    """Head with a cell on its right upper edge"""
    return growth_script([('up', 0)])


@pytest.fixture
def down_fish():
    """Descending strip of two cells"""
    return growth_script([('down', 0)])


@pytest.fixture
def v_fish():
    """Head with both right edges glued; two tails"""
    return growth_script([('up', 0), ('down', 0)])


@pytest.fixture
def diamond():
    """Four cells closed around one vertex; size 3"""
    return growth_script([('up', 0), ('down', 0), ('double', 1, 2)])


@pytest.fixture
def sample_tree():
    return parse_tree(SAMPLE_TREE_CODE)


@pytest.fixture
def render_style():
    return load_settings()['render']


@pytest.fixture
def sample_code():
    return SAMPLE_TREE_CODE
