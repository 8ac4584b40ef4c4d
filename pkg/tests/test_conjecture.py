"""Tests for the fin/core conjecture comparison"""
from collections import Counter

import pytest

from enumeration.conjecture import READINGS, conjecture_diff, first_difference


def test_one_cell():
    report = conjecture_diff(1)
    assert report.equal
    assert report.lines()[0] == 'n=1 normalized EQUAL (1 fish, 1 left trees)'
    assert [line.split()[1] for line in report.lines()] == list(READINGS)


def test_two_cells():
    report = conjecture_diff(2)
    assert report.fish_total == report.tree_total == 2
    assert report.equal


def test_raw_reading_differs():
    # the head has one tail and the single node no right branch
    report = conjecture_diff(1)
    assert not report.results['raw'].equal
    assert 'DIFF at' in report.lines()[2]


def test_deterministic():
    assert conjecture_diff(3).lines() == conjecture_diff(3).lines()


def test_first_difference():
    left = Counter({(1, 2): 3, (2, 2): 1})
    right = Counter({(1, 2): 3, (2, 3): 1})
    d = first_difference(left, right)
    assert d.key == (2, 2)
    assert (d.fish, d.trees) == (1, 0)
    assert first_difference(left, Counter(left)) is None


@pytest.mark.parametrize('n', [3, 4, 5])
def test_normalized_equal_up_to_five(n):
    report = conjecture_diff(n)
    assert report.equal
    assert report.fish_total == report.tree_total


def test_counting_every_right_edge_differs_at_five():
    report = conjecture_diff(5)
    assert not report.results['rightEdges'].equal
    assert conjecture_diff(4).results['rightEdges'].equal
