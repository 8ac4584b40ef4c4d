"""
q-Analogues
q-integers, Gaussian binomials and the fish polynomials G_n(q)
"""
from functools import lru_cache
from typing import List

from sympy import Poly, div
from sympy.abc import q

from utils.errors import InexactDivision


def qinteger(k: int) -> Poly:
    """[k] = 1 + q + ... + q^(k-1)"""
    if k < 0:
        raise ValueError(f"q-integer of a negative number: {k}")
    if k == 0:
        return Poly(0, q)
    return Poly.from_list([1] * k, gens=q)


def exact_quotient(numerator: Poly, denominator: Poly) -> Poly:
    quotient, remainder = div(numerator, denominator)
    if not remainder.is_zero:
        raise InexactDivision(f"{denominator.as_expr()} does not divide {numerator.as_expr()}")
    return quotient


@lru_cache(maxsize=None)
def qbinomial(m: int, k: int) -> Poly:
    """Gaussian binomial coefficient, built one exact division at a time"""
    if k < 0 or k > m:
        return Poly(0, q)
    k = min(k, m - k)
    result = Poly(1, q)
    for i in range(k):
        result = exact_quotient(result * qinteger(m - i), qinteger(i + 1))
    return result


def g_polynomial(n: int) -> Poly:
    """G_n(q) = [2] / ([n+1][2n+1]) * qbinom(3n, n); G_n(1) counts fish of size n"""
    if n < 1:
        raise ValueError(f"G_n is defined for n >= 1, got {n}")
    return exact_quotient(qinteger(2) * qbinomial(3 * n, n), qinteger(n + 1) * qinteger(2 * n + 1))


def coefficients(p: Poly) -> List[int]:
    """Ascending coefficients with no trailing zeros"""
    if p.is_zero:
        return []
    return [int(c) for c in reversed(p.all_coeffs())]


def evaluate(p: Poly, value: int) -> int:
    return int(p.eval(value))


def format_coefficients(p: Poly) -> str:
    """'c0 c1 c2 ...'"""
    return ' '.join(str(c) for c in coefficients(p))
