"""Utility modules"""

from .cache_manager import CacheManager
from .sharding import run_sharded, take_shard

__all__ = ['CacheManager', 'run_sharded', 'take_shard']
