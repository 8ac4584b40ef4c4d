"""
q-Polynomial Suite
G_n(q) against the listed polynomials and its evaluations at 1 and -1
"""
from typing import List

from enumeration.counting import count_fish, count_pairs
from enumeration.qpoly import coefficients, evaluate, g_polynomial
from suites.base_suite import BaseSuite, CheckResult

# Ascending coefficients of G_1 .. G_4 as published
KNOWN_G = {
    1: [1],
    2: [1, 0, 0, 1],
    3: [1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1],
    4: [1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 1, 1, 1, 0, 0, 1],
}


class QPolySuite(BaseSuite):
    """G_n(q) equals the listed polynomials, G_n(1) = |F_n|, G_n(-1) alternates with |SF|"""

    name = 'qpoly'
    description = "q-analogue of the fish count"

    def run(self, nmax: int) -> List[CheckResult]:
        for n in range(1, nmax + 1):
            g = g_polynomial(n)
            if n in KNOWN_G:
                self._check(f"n={n} coefficients", coefficients(g), KNOWN_G[n])
            self._check(f"n={n} G_n(1)", evaluate(g, 1), count_fish(n))
            expected = count_pairs((n - 1) // 2) if n % 2 else 0
            self._check(f"n={n} G_n(-1)", evaluate(g, -1), expected)
        return self.results
