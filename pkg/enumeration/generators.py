"""
Exhaustive Generators
Ternary trees, left trees, tree pairs and fish in deterministic order
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from tqdm import tqdm

from bijection.left import phi_left
from bijection.tails import TreePair
from fishcore.fish import Fish, decode, double_sites, glue_double, glue_lower, glue_upper, new_head
from ternary.tree import TernaryTree, Tree

logger = logging.getLogger(__name__)

VIA_LEFT_TREES = 'via-left-trees'
GROWTH_ORACLE = 'oracle'
METHODS = (VIA_LEFT_TREES, GROWTH_ORACLE)

Coded = Tuple[str, Tree]


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------
#
# `floor` is the abscissa the subtree root would have inside the whole tree;
# a node is allowed only at a non-negative abscissa. A subtree with k nodes
# cannot reach below floor - k + 1, so floor is capped at the size and
# unrestricted trees are simply floor == size.

@lru_cache(maxsize=None)
def _exact(n: int, floor: int) -> Tuple[Coded, ...]:
    """Trees with exactly n nodes, sorted by code"""
    floor = min(floor, n)
    if n == 0:
        return (('.', None),)
    if floor < 0:
        return ()
    result: List[Coded] = []
    for left_code, left in _upto(n - 1, floor + 1):
        rest = n - 1 - _size(left)
        for middle_code, middle in _upto(rest, floor):
            for right_code, right in _exact(rest - _size(middle), floor - 1):
                result.append((
                    '(' + left_code + middle_code + right_code + ')',
                    TernaryTree(left, middle, right),
                ))
    return tuple(result)


@lru_cache(maxsize=None)
def _upto(m: int, floor: int) -> Tuple[Coded, ...]:
    """Trees with at most m nodes (the empty tree included), sorted by code"""
    floor = min(floor, m)
    items = [item for k in range(m + 1) for item in _exact(k, floor)]
    return tuple(sorted(items, key=lambda item: item[0]))


def _size(t: Tree) -> int:
    return 0 if t is None else t.size


def gen_ternary(n: int) -> Iterator[Tree]:
    """All ternary trees with n nodes, lexicographic by tree code"""
    for _, t in _exact(n, n):
        yield t


def gen_left(n: int) -> Iterator[Tree]:
    """All left ternary trees with n nodes, lexicographic by tree code"""
    for _, t in _exact(n, 0):
        yield t


def gen_pairs(n: int) -> Iterator[TreePair]:
    """Ordered pairs with n nodes in total, by size of the first tree then by codes"""
    for k in range(n + 1):
        for _, first in _exact(k, k):
            for _, second in _exact(n - k, n - k):
                yield TreePair(first, second)


def clear_caches():
    _exact.cache_clear()
    _upto.cache_clear()


# ---------------------------------------------------------------------------
# Fish
# ---------------------------------------------------------------------------

def growth_oracle(n: int, show_progress: bool = False) -> Dict[bytes, Fish]:
    """
    All fish of size n by growing from the head.

    Double gluings keep the size, so each size level is first closed under
    them; upper and lower gluings then lift it to the next size. Fish are
    deduplicated by canonical code.
    """
    if n < 1:
        raise ValueError(f"fish size must be >= 1, got {n}")
    level: Dict[bytes, Fish] = {}
    frontier = [new_head()]
    for current in range(1, n + 1):
        for f in frontier:
            level.setdefault(f.code, f)
        pending = list(level.values())
        with tqdm(desc=f"oracle size {current}", disable=not show_progress, leave=False) as bar:
            while pending:
                grown = []
                for f in pending:
                    for a, b in double_sites(f):
                        g = glue_double(f, a, b)
                        if g.code not in level:
                            level[g.code] = g
                            grown.append(g)
                    bar.update(1)
                pending = grown
        logger.debug(f"Oracle level {current}: {len(level)} fish")
        if current == n:
            return level
        frontier = []
        seen = set()
        for f in level.values():
            for c, cell in enumerate(f.cells):
                for glue, edge in ((glue_upper, cell.ru), (glue_lower, cell.rl)):
                    if edge is not None:
                        continue
                    g = glue(f, c)
                    if g.code not in seen:
                        seen.add(g.code)
                        frontier.append(g)
        level = {}
    return level


def fish_codes(n: int, method: str = VIA_LEFT_TREES, cache=None,
               show_progress: bool = False) -> List[bytes]:
    """
    Canonical codes of all fish of size n in the method's deterministic order:
    left-tree order for via-left-trees, code order for the oracle.
    """
    if method not in METHODS:
        raise ValueError(f"unknown generation method '{method}'")

    def compute() -> List[str]:
        if method == VIA_LEFT_TREES:
            trees = gen_left(n)
            if show_progress:
                trees = tqdm(trees, desc=f"fish n={n}", leave=False)
            return [phi_left(t).code.decode('ascii') for t in trees]
        return sorted(code.decode('ascii') for code in growth_oracle(n, show_progress))

    if cache is None:
        codes = compute()
    else:
        codes = cache.get_or_compute(f"fish-{method}-{n}", compute)
    return [code.encode('ascii') for code in codes]


def gen_fish(n: int, method: str = VIA_LEFT_TREES, cache=None,
             show_progress: bool = False) -> Iterator[Fish]:
    """All fish of size n with canonical ids"""
    if n < 1:
        raise ValueError(f"fish size must be >= 1, got {n}")
    if method == VIA_LEFT_TREES and cache is None:
        trees = gen_left(n)
        if show_progress:
            trees = tqdm(trees, desc=f"fish n={n}", leave=False)
        for t in trees:
            yield phi_left(t)
        return
    for code in fish_codes(n, method, cache, show_progress):
        yield decode(code)
