"""
Closed-Form Counts
Exact counting formulas for fish, ternary trees, left trees and tree pairs
"""
from math import comb

from utils.errors import InexactDivision


def exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivision(f"{numerator} is not divisible by {denominator}")
    return quotient


def _require(n: int, minimum: int):
    if not isinstance(n, int) or n < minimum:
        raise ValueError(f"size must be an integer >= {minimum}, got {n!r}")


def count_ternary(n: int) -> int:
    """C(3n, n) / (2n + 1)"""
    _require(n, 0)
    return exact_div(comb(3 * n, n), 2 * n + 1)


def count_fish(n: int) -> int:
    """2 C(3n, n) / ((n + 1)(2n + 1))"""
    _require(n, 1)
    return exact_div(2 * comb(3 * n, n), (n + 1) * (2 * n + 1))


def count_pairs(n: int) -> int:
    """Ordered pairs of ternary trees with n nodes in total: C(3n + 1, n) / (n + 1)"""
    _require(n, 0)
    return exact_div(comb(3 * n + 1, n), n + 1)


def count_left(n: int) -> int:
    _require(n, 1)
    return exact_div(2 * count_ternary(n), n + 1)


def count_left_refined(i: int, j: int) -> int:
    """Left trees with i + 1 nodes at even abscissa and j at odd abscissa"""
    _require(i, 0)
    _require(j, 0)
    return exact_div(comb(2 * i + j + 1, j) * comb(i + 2 * j + 1, i), (i + 1) * (j + 1))


def count_ternary_refined(n: int, odd: int) -> int:
    """
    Ternary trees with n nodes of which `odd` sit at odd abscissa.

    Marking one of the odd + 1 descending strips of each fish with odd + 1
    of them gives these trees, and left trees are counted by their fish.
    """
    _require(n, 1)
    if not 0 <= odd <= n - 1:
        return 0
    return (odd + 1) * count_left_refined(n - 1 - odd, odd)


def count_symmetric(n: int) -> int:
    """Symmetric fish of size 2n + 1"""
    return count_pairs(n)


def count_symmetric_odd_tails(n: int) -> int:
    _require(n, 0)
    return exact_div(comb(3 * n, n), 2 * n + 1)


def count_symmetric_even_tails(n: int) -> int:
    _require(n, 0)
    return exact_div(comb(3 * n, n + 1), 2 * n + 1)


def count_symmetric_size(size: int, parity: str = 'all') -> int:
    """Symmetric fish counted by size; even sizes have none"""
    _require(size, 1)
    if size % 2 == 0:
        return 0
    n = (size - 1) // 2
    return {
        'all': count_symmetric,
        'odd': count_symmetric_odd_tails,
        'even': count_symmetric_even_tails,
    }[parity](n)
