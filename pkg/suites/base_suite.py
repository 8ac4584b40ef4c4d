"""
Base Suite Class
Abstract base class for all verification suites
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, List, Optional
import logging

from enumeration.generators import GROWTH_ORACLE, VIA_LEFT_TREES, gen_fish
from utils.errors import OracleLimit

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """One observed-versus-expected comparison"""
    suite: str
    name: str
    observed: Any
    expected: Any

    @property
    def passed(self) -> bool:
        return self.observed == self.expected

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite} {self.name}: {self.observed} == {self.expected}"


class BaseSuite(ABC):
    """Abstract base class for verification suites"""

    name = ''
    description = ''

    def __init__(self, method: str = VIA_LEFT_TREES, workers: int = 1, cache=None,
                 show_progress: bool = False, max_oracle: Optional[int] = None):
        """
        Initialize the suite

        Args:
            method: Fish generation method used by enumeration-based checks
            workers: Number of processes for census-based checks
            cache: Optional CacheManager for enumerated fish levels
            show_progress: Whether long loops display progress bars
            max_oracle: Largest size the growth oracle may be asked for
        """
        self.method = method
        self.workers = workers
        self.cache = cache
        self.show_progress = show_progress
        self.max_oracle = max_oracle
        self.results: List[CheckResult] = []

    @abstractmethod
    def run(self, nmax: int) -> List[CheckResult]:
        """
        Run every check of the suite for sizes up to nmax

        Args:
            nmax: Largest size to check

        Returns:
            List of check results in a fixed order
        """
        pass

    def _check(self, name: str, observed: Any, expected: Any) -> CheckResult:
        result = CheckResult(self.name, name, observed, expected)
        if not result.passed:
            logger.warning(result.line())
        self.results.append(result)
        return result

    def _fish(self, n: int):
        if self.method == GROWTH_ORACLE and self.max_oracle is not None and n > self.max_oracle:
            raise OracleLimit(f"growth oracle is capped at n={self.max_oracle}, asked for n={n}")
        return gen_fish(n, self.method, self.cache, self.show_progress)
