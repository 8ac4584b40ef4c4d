"""
Bijection Suites
Marked-fish bijection, the (n+1)-to-2 correspondence and the left-tree bijection
"""
from typing import List

from bijection.base_bijection import LeftTreeBijection, MarkedFishBijection
from bijection.marked import phi
from enumeration.census import census
from enumeration.counting import count_fish, count_ternary
from enumeration.generators import gen_ternary
from fishcore.fish import Orientation, strips
from suites.base_suite import BaseSuite, CheckResult
from ternary.tree import abscissa_counts


class MarkedFishSuite(BaseSuite):
    """Ternary trees with n nodes <-> fish of size n with a marked descending strip"""

    name = 'thm1'
    description = "phi is a bijection T_n -> MF_n with the strip-count contract"

    def run(self, nmax: int) -> List[CheckResult]:
        bijection = MarkedFishBijection(self.show_progress)
        for n in range(1, nmax + 1):
            trees, image, marked = bijection.image_counts(n)
            self._check(f"n={n} trees", trees, count_ternary(n))
            self._check(f"n={n} distinct images", image, trees)
            self._check(f"n={n} marked fish", marked, trees)

            violations = 0
            for t in gen_ternary(n):
                odd, even, _ = abscissa_counts(t)
                f = phi(t).fish
                if (len(strips(f, Orientation.DESCENDING)) != odd + 1
                        or len(strips(f, Orientation.ASCENDING)) != even):
                    violations += 1
            self._check(f"n={n} strip-count violations", violations, 0)

            _, failures = bijection.check_tree_round_trips(n)
            self._check(f"n={n} tree round-trip failures", len(failures), 0)
            _, failures = bijection.check_fish_round_trips(n)
            self._check(f"n={n} marked-fish round-trip failures", len(failures), 0)
        return self.results


class TwoToManySuite(BaseSuite):
    """(n+1) |F_n| = 2 |T_n|, refined by the number of descending strips"""

    name = 'thm2'
    description = "(n+1)-to-2 correspondence, refined by descending strips"

    def run(self, nmax: int) -> List[CheckResult]:
        for n in range(1, nmax + 1):
            fish = census('fish', n, ['descStrips', 'ascStrips'], self.method,
                          self.workers, self.cache)
            trees = census('ternary', n, ['oddAbscissa'], workers=self.workers)
            strip_total = sum((d + a) * c for (d, a), c in fish.counts.items())
            self._check(f"n={n} (n+1)|F_n| = 2|T_n|", (n + 1) * fish.total, 2 * trees.total)
            self._check(f"n={n} strips over F_n = 2|T_n|", strip_total, 2 * trees.total)
            self._check(f"n={n} |F_n|", fish.total, count_fish(n))

            by_desc = fish.marginal('descStrips')
            by_odd = trees.marginal('oddAbscissa')
            for ell in range(n):
                f_ell = by_desc.get(ell + 1, 0)
                self._check(f"n={n} l={ell} (l+1)|F_n,l| = |T_n,l|",
                            (ell + 1) * f_ell, by_odd.get(ell, 0))
                self._check(f"n={n} l={ell} (n-l)|F_n,l| = |T_n,n-l-1|",
                            (n - ell) * f_ell, by_odd.get(n - ell - 1, 0))
        return self.results


class LeftTreeFishSuite(BaseSuite):
    """Left ternary trees with n nodes <-> fish of size n"""

    name = 'thm3'
    description = "phi_left round trips and the joint strip/jaw census"

    def run(self, nmax: int) -> List[CheckResult]:
        bijection = LeftTreeBijection(self.show_progress)
        for n in range(1, nmax + 1):
            checked, failures = bijection.check_tree_round_trips(n)
            self._check(f"n={n} left trees", checked, count_fish(n))
            self._check(f"n={n} left-tree round-trip failures", len(failures), 0)
            checked, failures = bijection.check_fish_round_trips(n)
            self._check(f"n={n} fish round-trip failures", len(failures), 0)

            fish = census('fish', n, ['descStrips', 'ascStrips', 'jawLen'], self.method,
                          self.workers, self.cache)
            trees = census('left_trees', n, ['oddAbscissa', 'evenAbscissa', 'zeroAbscissa'],
                           workers=self.workers)
            shifted = {(odd + 1, even, zero): c for (odd, even, zero), c in trees.counts.items()}
            mismatched = sum(1 for key in set(fish.counts) | set(shifted)
                             if fish.counts.get(key, 0) != shifted.get(key, 0))
            self._check(f"n={n} (desc, asc, jaw) vs (odd+1, even, zero) mismatched tuples",
                        mismatched, 0)
        return self.results
