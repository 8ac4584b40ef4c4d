"""Verification suites for the fish/tree bijections"""

from suites.base_suite import BaseSuite, CheckResult
from suites.pair_suites import LeftTreesSuite, SymmetricSuite, TailsSuite
from suites.qpoly_suite import QPolySuite
from suites.structure_suites import StemCellSuite, OracleSuite
from suites.bijection_suites import MarkedFishSuite, TwoToManySuite, LeftTreeFishSuite

# Registry of available suites, in the order `verify all` runs them
SUITES = {
    'lemma2': StemCellSuite,
    'thm1': MarkedFishSuite,
    'thm2': TwoToManySuite,
    'thm3': LeftTreeFishSuite,
    'tails': TailsSuite,
    'symmetric': SymmetricSuite,
    'lefttrees': LeftTreesSuite,
    'oracle': OracleSuite,
    'qpoly': QPolySuite,
}

__all__ = ['BaseSuite', 'CheckResult', 'SUITES']
