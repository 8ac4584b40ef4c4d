"""
Structure Suites
Stem-cell counts and growth-oracle agreement
"""
import logging
from typing import List

from enumeration.counting import count_fish
from enumeration.generators import GROWTH_ORACLE, VIA_LEFT_TREES, fish_codes
from fishcore.fish import StemKind, size, stem_cells, tails
from suites.base_suite import BaseSuite, CheckResult

logger = logging.getLogger(__name__)


class StemCellSuite(BaseSuite):
    """A fish of size n has n stem cells and one branch cell fewer than it has tails"""

    name = 'lemma2'
    description = "stem cells = size, branch cells = tails - 1"

    def run(self, nmax: int) -> List[CheckResult]:
        for n in range(1, nmax + 1):
            fish = 0
            stem_violations = 0
            branch_violations = 0
            for f in self._fish(n):
                fish += 1
                stems = stem_cells(f)
                if len(stems) != size(f):
                    stem_violations += 1
                branches = sum(1 for kind in stems.values() if kind is StemKind.BRANCH)
                if branches != len(tails(f)) - 1:
                    branch_violations += 1
            self._check(f"n={n} fish checked", fish, count_fish(n))
            self._check(f"n={n} fish with stem cells != size", stem_violations, 0)
            self._check(f"n={n} fish with branch cells != tails - 1", branch_violations, 0)
        return self.results


class OracleSuite(BaseSuite):
    """Fish generated from left trees coincide with fish grown from the head"""

    name = 'oracle'
    description = "via-left-trees and growth-oracle code sets agree"

    def run(self, nmax: int) -> List[CheckResult]:
        top = nmax if self.max_oracle is None else min(nmax, self.max_oracle)
        if top < nmax:
            logger.warning(f"Oracle capped at n={top} (requested {nmax})")
        for n in range(1, top + 1):
            via_trees = set(fish_codes(n, VIA_LEFT_TREES, self.cache, self.show_progress))
            oracle = set(fish_codes(n, GROWTH_ORACLE, self.cache, self.show_progress))
            self._check(f"n={n} oracle fish", len(oracle), count_fish(n))
            self._check(f"n={n} left-tree fish", len(via_trees), count_fish(n))
            self._check(f"n={n} code sets differ by", len(via_trees ^ oracle), 0)
        return self.results
