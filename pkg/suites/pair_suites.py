"""
Pair Suites
Tails bijection, symmetric fish and the left-tree enumeration
"""
from typing import List

from bijection.base_bijection import TailsBijection
from bijection.left import node_images
from bijection.symmetric import has_odd_tails, pair_to_symmetric, symmetric_to_pair
from bijection.tails import tails_to_pair
from enumeration.census import census
from enumeration.counting import (
    count_left,
    count_left_refined,
    count_pairs,
    count_symmetric,
    count_symmetric_even_tails,
    count_symmetric_odd_tails,
    count_ternary,
)
from enumeration.generators import gen_left, gen_pairs
from fishcore.fish import conjugate, conjugate_cell, is_symmetric, tails
from suites.base_suite import BaseSuite, CheckResult
from ternary.tree import is_left_tree, tree_code

# Largest size for the exhaustive conjugation check
CONJUGATION_MAX = 5


class TailsSuite(BaseSuite):
    """Fish of size n with a marked tail <-> pairs of trees with n - 1 nodes"""

    name = 'tails'
    description = "tails bijection, tail totals and the conjugation swap"

    def run(self, nmax: int) -> List[CheckResult]:
        bijection = TailsBijection(self.show_progress)
        for n in range(1, nmax + 1):
            total = sum(len(tails(f)) for f in self._fish(n))
            self._check(f"n={n} tails over F_n", total, count_pairs(n - 1))

            checked, failures = bijection.check_tree_round_trips(n)
            self._check(f"n={n} pairs", checked, count_pairs(n - 1))
            self._check(f"n={n} pair round-trip failures", len(failures), 0)
            _, failures = bijection.check_fish_round_trips(n)
            self._check(f"n={n} tailed-fish round-trip failures", len(failures), 0)

            if n <= CONJUGATION_MAX:
                violations = 0
                for f in self._fish(n):
                    g = conjugate(f)
                    for t in tails(f):
                        if tails_to_pair(g, conjugate_cell(f, t)) != tails_to_pair(f, t).swapped():
                            violations += 1
                self._check(f"n={n} conjugation swap violations", violations, 0)
        return self.results


class SymmetricSuite(BaseSuite):
    """Symmetric fish of size 2n + 1 <-> pairs of trees with n nodes; nmax bounds the fish size"""

    name = 'symmetric'
    description = "symmetric fish counts, tail parity split and the pair bijection"

    def run(self, nmax: int) -> List[CheckResult]:
        for size in range(1, nmax + 1, 2):
            n = (size - 1) // 2
            odd = even = failures = parity_errors = 0
            for f in self._fish(size):
                if not is_symmetric(f):
                    continue
                pair = symmetric_to_pair(f)
                if has_odd_tails(f):
                    odd += 1
                else:
                    even += 1
                if (pair.second is None) != (len(tails(f)) % 2 == 1):
                    parity_errors += 1
                if pair_to_symmetric(pair, n) != f:
                    failures += 1
            self._check(f"size={size} symmetric fish", odd + even, count_symmetric(n))
            self._check(f"size={size} odd tails", odd, count_symmetric_odd_tails(n))
            self._check(f"size={size} even tails", even, count_symmetric_even_tails(n))
            self._check(f"size={size} tail-parity mismatches", parity_errors, 0)
            self._check(f"size={size} fish round-trip failures", failures, 0)

            images = set()
            pair_failures = 0
            for pair in gen_pairs(n):
                f = pair_to_symmetric(pair)
                images.add(f.code)
                if not is_symmetric(f) or symmetric_to_pair(f).codes() != pair.codes():
                    pair_failures += 1
            self._check(f"size={size} pair round-trip failures", pair_failures, 0)
            self._check(f"size={size} distinct images", len(images), count_pairs(n))
        return self.results


class LeftTreesSuite(BaseSuite):
    """Left-tree counts, the refined formula and the odd/even node bijections"""

    name = 'lefttrees'
    description = "|LT_n|, refined counts and (tree, node) bijections"

    def run(self, nmax: int) -> List[CheckResult]:
        for n in range(1, nmax + 1):
            refined = census('left_trees', n, ['evenAbscissa', 'oddAbscissa'],
                             workers=self.workers)
            self._check(f"n={n} left trees", refined.total, count_left(n))
            for j in range(n):
                i = n - 1 - j
                self._check(f"n={n} i={i} j={j} refined count",
                            refined.counts.get((i + 1, j), 0), count_left_refined(i, j))

            odd_images, even_images = set(), set()
            odd_pairs = even_pairs = left_images = 0
            for t in gen_left(n):
                for _, alpha, image in node_images(t):
                    if alpha % 2:
                        odd_pairs += 1
                        odd_images.add(tree_code(image))
                        left_images += is_left_tree(image)
                    else:
                        even_pairs += 1
                        even_images.add(tree_code(image))
            self._check(f"n={n} odd (tree, node) pairs", odd_pairs,
                        count_ternary(n) - count_left(n))
            self._check(f"n={n} distinct odd images", len(odd_images), odd_pairs)
            self._check(f"n={n} odd images that are left trees", left_images, 0)
            self._check(f"n={n} even (tree, node) pairs", even_pairs, count_ternary(n))
            self._check(f"n={n} distinct even images", len(even_images), even_pairs)
        return self.results
