"""
Census
Joint statistic distributions over the enumerable families
"""
import csv
import io
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from bijection.left import phi_left
from bijection.marked import MarkedFish, marked_fish
from config import load_family_config
from enumeration.generators import VIA_LEFT_TREES, gen_fish, gen_left, gen_ternary
from fishcore.fin import fin_length
from fishcore.fish import Fish, Orientation, branch_cells, is_symmetric, jaw, size, strips, tails
from ternary.tree import Tree, abscissa_counts, core_size, right_branch_count, right_path_count, tree_size
from utils.errors import UnknownFamily, UnknownStatistic
from utils.sharding import run_sharded, take_shard

logger = logging.getLogger(__name__)


def _fish(obj) -> Fish:
    return obj.fish if isinstance(obj, MarkedFish) else obj


FISH_STATISTICS: Dict[str, Callable] = {
    'size': lambda x: size(_fish(x)),
    'descStrips': lambda x: len(strips(_fish(x), Orientation.DESCENDING)),
    'ascStrips': lambda x: len(strips(_fish(x), Orientation.ASCENDING)),
    'jawLen': lambda x: len(jaw(_fish(x))),
    'tails': lambda x: len(tails(_fish(x))),
    'branchCells': lambda x: len(branch_cells(_fish(x))),
    'finLen': lambda x: fin_length(_fish(x)),
    'markLen': lambda x: len(x.mark),
}

TREE_STATISTICS: Dict[str, Callable[[Tree], int]] = {
    'nodes': tree_size,
    'oddAbscissa': lambda t: abscissa_counts(t)[0] if t is not None else 0,
    'evenAbscissa': lambda t: abscissa_counts(t)[1] if t is not None else 0,
    'zeroAbscissa': lambda t: abscissa_counts(t)[2] if t is not None else 0,
    'coreSize': lambda t: core_size(t) if t is not None else 0,
    'rightBranches': lambda t: right_branch_count(t) if t is not None else 0,
    'rightPaths': lambda t: right_path_count(t) if t is not None else 0,
}

STATISTICS = {**FISH_STATISTICS, **TREE_STATISTICS}


@dataclass
class Census:
    """Multiset of statistic tuples over one family at one size"""
    family: str
    n: int
    statistics: Tuple[str, ...]
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> List[Tuple[Tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def marginal(self, statistic: str) -> Counter:
        i = self.statistics.index(statistic)
        result = Counter()
        for key, count in self.counts.items():
            result[key[i]] += count
        return result

    def to_text(self) -> str:
        lines = [f"# {self.family} n={self.n} total={self.total}",
                 ' '.join(self.statistics) + ' count']
        lines.extend(' '.join(map(str, key)) + f' {count}' for key, count in self.rows())
        return '\n'.join(lines) + '\n'

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow([*self.statistics, 'count'])
        for key, count in self.rows():
            writer.writerow([*key, count])
        return buffer.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            'family': self.family,
            'n': self.n,
            'statistics': list(self.statistics),
            'total': self.total,
            'rows': [{'values': list(key), 'count': count} for key, count in self.rows()],
        }, indent=2) + '\n'

    def export(self, fmt: str) -> str:
        return {'text': self.to_text, 'csv': self.to_csv, 'json': self.to_json}[fmt]()


def validate(family: str, statistics: Sequence[str]) -> Dict:
    """Check family and statistic names against the registry in families.yaml"""
    families = load_family_config()['families']
    if family not in families:
        raise UnknownFamily(f"unknown family '{family}'; choose from {', '.join(families)}")
    allowed = families[family]['statistics']
    for name in statistics:
        if name not in allowed:
            raise UnknownStatistic(
                f"unknown statistic '{name}' for {family}; choose from {', '.join(allowed)}"
            )
    return families[family]


def _fish_items(n: int, method: str, cache, shard: int, shards: int) -> Iterator[Fish]:
    if method == VIA_LEFT_TREES:
        # shard the trees so that only this shard's fish get built
        return (phi_left(t) for t in take_shard(gen_left(n), shard, shards))
    return take_shard(gen_fish(n, method, cache), shard, shards)


def family_items(family: str, n: int, method: str = VIA_LEFT_TREES, cache=None,
                 shard: int = 0, shards: int = 1) -> Iterator:
    """The objects of a family in deterministic order, restricted to one shard"""
    if family == 'fish':
        return _fish_items(n, method, cache, shard, shards)
    if family == 'symmetric_fish':
        return (f for f in _fish_items(n, method, cache, shard, shards) if is_symmetric(f))
    if family == 'marked_fish':
        return (m for f in _fish_items(n, method, cache, shard, shards) for m in marked_fish(f))
    if family == 'left_trees':
        return take_shard(gen_left(n), shard, shards)
    if family == 'ternary':
        return take_shard(gen_ternary(n), shard, shards)
    raise UnknownFamily(f"unknown family '{family}'")


def _census_shard(family: str, n: int, statistics: Tuple[str, ...], method: str,
                  shard: int, shards: int) -> Counter:
    functions = [STATISTICS[name] for name in statistics]
    return Counter(tuple(fn(item) for fn in functions)
                   for item in family_items(family, n, method, None, shard, shards))


def census(family: str, n: int, statistics: Sequence[str], method: str = VIA_LEFT_TREES,
           workers: int = 1, cache=None) -> Census:
    """
    Count the family's objects of size n by the tuple of the named statistics.

    Sharded runs split the enumeration round-robin and merge the counts, so
    the result does not depend on the number of workers.
    """
    spec = validate(family, statistics)
    if n < spec['min_size']:
        raise ValueError(f"{family} needs n >= {spec['min_size']}, got {n}")
    statistics = tuple(statistics)
    if workers > 1 or cache is None:
        counts = run_sharded(_census_shard, (family, n, statistics, method), workers)
    else:
        functions = [STATISTICS[name] for name in statistics]
        counts = Counter(tuple(fn(item) for fn in functions)
                         for item in family_items(family, n, method, cache))
    logger.info(f"Census of {family} at n={n}: {sum(counts.values())} objects")
    return Census(family, n, statistics, counts)
