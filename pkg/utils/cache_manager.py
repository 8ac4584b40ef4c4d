"""
Cache Manager
File-based cache for enumerated fish levels
"""
import hashlib
import json
import logging
import os
from typing import Any, Callable, Optional

logger = logging.getLogger(__name__)

# Bump when the canonical code format changes
CACHE_FORMAT = "fishbij/1"


class CacheManager:
    """Stores JSON-serialisable results under a directory, one file per key"""

    def __init__(self, cache_dir: str = ".cache/fishbij"):
        """
        Initialize cache manager

        Args:
            cache_dir: Directory to store cache files
        """
        self.cache_dir = cache_dir
        os.makedirs(cache_dir, exist_ok=True)

    def _get_cache_path(self, key: str) -> str:
        """Get cache file path for a key"""
        key_hash = hashlib.md5(f"{CACHE_FORMAT}:{key}".encode()).hexdigest()
        return os.path.join(self.cache_dir, f"{key_hash}.json")

    def get(self, key: str) -> Optional[Any]:
        """
        Get value from cache

        Args:
            key: Cache key

        Returns:
            Cached value or None if not found or unreadable
        """
        cache_path = self._get_cache_path(key)
        if not os.path.exists(cache_path):
            return None
        try:
            with open(cache_path, 'r', encoding='utf-8') as f:
                cache_data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Ignoring unreadable cache entry {cache_path}: {e}")
            return None
        if cache_data.get('format') != CACHE_FORMAT or cache_data.get('key') != key:
            return None
        return cache_data['value']

    def set(self, key: str, value: Any):
        """
        Set value in cache

        Args:
            key: Cache key
            value: Value to cache
        """
        cache_path = self._get_cache_path(key)
        cache_data = {'format': CACHE_FORMAT, 'key': key, 'value': value}
        try:
            with open(cache_path, 'w', encoding='utf-8') as f:
                json.dump(cache_data, f)
        except OSError as e:
            logger.warning(f"Could not write cache entry {cache_path}: {e}")

    def get_or_compute(self, key: str, compute_func: Callable[[], Any]) -> Any:
        """
        Get from cache or compute and cache

        Args:
            key: Cache key
            compute_func: Function producing the value if not cached

        Returns:
            Cached or computed value
        """
        cached = self.get(key)
        if cached is not None:
            logger.debug(f"Cache hit for {key}")
            return cached
        value = compute_func()
        self.set(key, value)
        return value
