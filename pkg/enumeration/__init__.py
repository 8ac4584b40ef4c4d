"""Generators, closed-form counts, q-polynomials and censuses"""

from enumeration.counting import (
    count_fish,
    count_left,
    count_left_refined,
    count_pairs,
    count_symmetric,
    count_symmetric_even_tails,
    count_symmetric_odd_tails,
    count_symmetric_size,
    count_ternary,
    count_ternary_refined,
)
from enumeration.generators import (
    GROWTH_ORACLE,
    METHODS,
    VIA_LEFT_TREES,
    fish_codes,
    gen_fish,
    gen_left,
    gen_pairs,
    gen_ternary,
    growth_oracle,
)
from enumeration.qpoly import coefficients, g_polynomial, qbinomial, qinteger
from enumeration.census import Census, census
from enumeration.conjecture import ConjectureReport, conjecture_diff

__all__ = [
    'count_fish', 'count_left', 'count_left_refined', 'count_pairs', 'count_symmetric',
    'count_symmetric_even_tails', 'count_symmetric_odd_tails', 'count_symmetric_size',
    'count_ternary', 'count_ternary_refined', 'GROWTH_ORACLE', 'METHODS', 'VIA_LEFT_TREES',
    'fish_codes', 'gen_fish', 'gen_left', 'gen_pairs', 'gen_ternary', 'growth_oracle',
    'coefficients', 'g_polynomial', 'qbinomial', 'qinteger', 'Census', 'census',
    'ConjectureReport', 'conjecture_diff',
]
