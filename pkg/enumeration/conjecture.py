"""
Fin and Tail Statistics Diff
Compares joint fish statistics with joint left-tree statistics under several offset readings
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from enumeration.census import census

logger = logging.getLogger(__name__)

FISH_STATS = ('size', 'finLen', 'tails', 'ascStrips', 'descStrips')
TREE_STATS = ('nodes', 'coreSize', 'rightPaths', 'evenAbscissa', 'oddAbscissa', 'rightBranches')

Key = Tuple[int, ...]


def _readings(fin_offset: int) -> Dict[str, Tuple[Callable[[Key], Key], Callable[[Key], Key]]]:
    """
    reading -> (fish key map, tree key map), both onto
    (size, fin, tails, ascending strips, descending strips).

    Tails are compared with maximal right branches except in rightEdges,
    which counts every right edge separately.

    raw compares the counts as they are; verbatim follows the conjecture's
    wording (i ascending strips against i + 1 non-root even nodes);
    normalized uses the offsets forced by the one-cell fish and the left tree
    bijection.
    """
    def normalized_fish(k: Key) -> Key:
        return k[0], k[1] - fin_offset, k[2] - 1, k[3], k[4]

    return {
        'raw': (
            lambda k: k,
            lambda k: k[:5],
        ),
        'verbatim': (
            lambda k: k,
            lambda k: (k[0], k[1], k[2], k[3] - 2, k[4]),
        ),
        'normalized': (
            normalized_fish,
            lambda k: (k[0], k[1], k[2], k[3], k[4] + 1),
        ),
        'rightEdges': (
            normalized_fish,
            lambda k: (k[0], k[1], k[5], k[3], k[4] + 1),
        ),
    }


READINGS = ('normalized', 'verbatim', 'raw', 'rightEdges')


@dataclass
class Difference:
    key: Key
    fish: int
    trees: int


@dataclass
class ReadingResult:
    reading: str
    first_difference: Optional[Difference] = None

    @property
    def equal(self) -> bool:
        return self.first_difference is None


@dataclass
class ConjectureReport:
    n: int
    fish_total: int
    tree_total: int
    results: Dict[str, ReadingResult] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.results['normalized'].equal

    def lines(self) -> List[str]:
        out = []
        for reading in READINGS:
            result = self.results[reading]
            if result.equal:
                out.append(f"n={self.n} {reading} EQUAL "
                           f"({self.fish_total} fish, {self.tree_total} left trees)")
            else:
                d = result.first_difference
                out.append(f"n={self.n} {reading} DIFF at {d.key}: fish {d.fish}, trees {d.trees}")
        return out


def _remap(counts: Counter, key_map: Callable[[Key], Key]) -> Counter:
    result = Counter()
    for key, count in counts.items():
        result[key_map(key)] += count
    return result


def first_difference(left: Counter, right: Counter) -> Optional[Difference]:
    for key in sorted(set(left) | set(right)):
        if left.get(key, 0) != right.get(key, 0):
            return Difference(key, left.get(key, 0), right.get(key, 0))
    return None


def conjecture_diff(n: int, fin_offset: int = 1, workers: int = 1, cache=None) -> ConjectureReport:
    """Joint census over fish and left trees of size n, compared under every reading"""
    fish_census = census('fish', n, FISH_STATS, workers=workers, cache=cache)
    tree_census = census('left_trees', n, TREE_STATS, workers=workers)
    report = ConjectureReport(n, fish_census.total, tree_census.total)
    for reading, (fish_map, tree_map) in _readings(fin_offset).items():
        diff = first_difference(_remap(fish_census.counts, fish_map),
                                _remap(tree_census.counts, tree_map))
        report.results[reading] = ReadingResult(reading, diff)
    if not report.equal:
        logger.info(f"Normalized reading differs at n={n}")
    return report
