"""Tests for the verification suites"""
import pytest

from suites import SUITES
from suites.base_suite import CheckResult
from enumeration.generators import GROWTH_ORACLE
from suites.structure_suites import OracleSuite, StemCellSuite
from utils.errors import OracleLimit


@pytest.mark.parametrize('name', list(SUITES))
def test_suite_passes_at_small_sizes(name):
    results = SUITES[name]().run(4)
    assert results
    failed = [r.line() for r in results if not r.passed]
    assert failed == []


def test_result_line():
    assert CheckResult('thm2', 'n=3 |F_n|', 6, 6).line() == 'PASS thm2 n=3 |F_n|: 6 == 6'
    assert CheckResult('thm2', 'x', 5, 6).line() == 'FAIL thm2 x: 5 == 6'


def test_oracle_cap():
    results = OracleSuite(max_oracle=2).run(5)
    assert {r.name.split()[0] for r in results} == {'n=1', 'n=2'}


def test_oracle_method_respects_cap():
    assert StemCellSuite(method=GROWTH_ORACLE, max_oracle=3).run(3)
    with pytest.raises(OracleLimit):
        StemCellSuite(method=GROWTH_ORACLE, max_oracle=3).run(4)


def test_registry_order():
    assert list(SUITES) == [
        'lemma2', 'thm1', 'thm2', 'thm3', 'tails', 'symmetric', 'lefttrees', 'oracle', 'qpoly',
    ]


@pytest.mark.slow
@pytest.mark.parametrize('name', ['lemma2', 'thm2', 'thm3', 'oracle'])
def test_suite_passes_at_seven(name):
    results = SUITES[name]().run(7)
    assert all(r.passed for r in results)


@pytest.mark.slow
def test_symmetric_size_nine():
    results = SUITES['symmetric']().run(9)
    counts = [r for r in results if r.name.endswith('symmetric fish')]
    assert [r.observed for r in counts] == [1, 2, 7, 30, 143]
    assert all(r.passed for r in results)
