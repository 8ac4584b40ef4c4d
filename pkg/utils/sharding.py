"""
Sharded Counting
Round-robin sharding of deterministic enumerations over worker processes
"""
import logging
from collections import Counter
from multiprocessing import Pool
from typing import Callable, Iterable, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')


def take_shard(items: Iterable[T], shard: int, shards: int) -> Iterable[T]:
    """Items whose position in the enumeration is congruent to shard mod shards"""
    for i, item in enumerate(items):
        if i % shards == shard:
            yield item


def run_sharded(worker: Callable[..., Counter], args: Sequence, workers: int) -> Counter:
    """
    Run worker(*args, shard, shards) for every shard and merge the Counters.

    worker must be a module-level function so it can be pickled. With one
    worker everything runs in-process.
    """
    if workers <= 1:
        return worker(*args, 0, 1)
    logger.info(f"Sharding over {workers} processes")
    with Pool(workers) as pool:
        parts = pool.starmap(worker, [(*args, shard, workers) for shard in range(workers)])
    total = Counter()
    for part in parts:
        total.update(part)
    return total
