"""
Base Bijection Class
Abstract base class for the fish <-> tree bijections
"""
from abc import ABC, abstractmethod
from typing import Any, Hashable, Iterable, Iterator, List, Tuple
import logging

from tqdm import tqdm

from bijection.left import phi_left, phi_left_inv
from bijection.marked import MarkedFish, marked_fish, phi, phi_inv
from bijection.symmetric import pair_to_symmetric, symmetric_to_pair
from bijection.tails import TreePair, pair_to_tailed_fish, tailed_key, tails_to_pair
from fishcore.fish import Fish, is_symmetric, tails
from ternary.tree import tree_code

logger = logging.getLogger(__name__)


class BaseBijection(ABC):
    """A bijection between a family of fish objects and a family of tree objects"""

    name = ''

    def __init__(self, show_progress: bool = False):
        """
        Initialize the bijection

        Args:
            show_progress: Whether batch checks display a progress bar
        """
        self.show_progress = show_progress

    @abstractmethod
    def tree_side(self, n: int) -> Iterator[Any]:
        """
        Enumerate the tree-side objects of size n

        Args:
            n: Size parameter of the family

        Returns:
            Iterator over the objects in deterministic order
        """
        pass

    @abstractmethod
    def fish_side(self, n: int) -> Iterator[Any]:
        """Enumerate the fish-side objects of size n"""
        pass

    @abstractmethod
    def to_fish(self, x: Any) -> Any:
        pass

    @abstractmethod
    def to_tree(self, y: Any) -> Any:
        pass

    def fish_key(self, y: Any) -> Hashable:
        """Numbering-independent identity of a fish-side object"""
        return y

    def tree_key(self, x: Any) -> Hashable:
        return x

    def _progress(self, items: Iterable, desc: str) -> Iterable:
        return tqdm(items, desc=desc, disable=not self.show_progress, leave=False)

    def check_tree_round_trips(self, n: int) -> Tuple[int, List[Any]]:
        """
        Map every tree-side object to the fish side and back

        Args:
            n: Size parameter of the family

        Returns:
            (number checked, objects that did not come back unchanged)
        """
        checked, failures = 0, []
        for x in self._progress(self.tree_side(n), f"{self.name} n={n}"):
            checked += 1
            if self.tree_key(self.to_tree(self.to_fish(x))) != self.tree_key(x):
                failures.append(x)
        if failures:
            logger.warning(f"{self.name}: {len(failures)} tree round trips failed at n={n}")
        return checked, failures

    def check_fish_round_trips(self, n: int) -> Tuple[int, List[Any]]:
        checked, failures = 0, []
        for y in self._progress(self.fish_side(n), f"{self.name}^-1 n={n}"):
            checked += 1
            if self.fish_key(self.to_fish(self.to_tree(y))) != self.fish_key(y):
                failures.append(y)
        if failures:
            logger.warning(f"{self.name}: {len(failures)} fish round trips failed at n={n}")
        return checked, failures

    def image_counts(self, n: int) -> Tuple[int, int, int]:
        """
        Compare the image of the tree side against the fish side

        Args:
            n: Size parameter of the family

        Returns:
            (tree-side objects, distinct images lying on the fish side,
            fish-side objects); all three agree exactly for a bijection
        """
        trees, image = 0, set()
        for x in self._progress(self.tree_side(n), f"{self.name} image n={n}"):
            trees += 1
            image.add(self.fish_key(self.to_fish(x)))
        target = {self.fish_key(y) for y in self.fish_side(n)}
        return trees, len(image & target), len(target)


class MarkedFishBijection(BaseBijection):
    """Ternary trees with n nodes <-> fish of size n with a marked descending strip"""

    name = 'marked'

    def tree_side(self, n: int) -> Iterator:
        from enumeration.generators import gen_ternary
        return gen_ternary(n)

    def fish_side(self, n: int) -> Iterator[MarkedFish]:
        from enumeration.generators import gen_fish
        for f in gen_fish(n):
            yield from marked_fish(f)

    def to_fish(self, x) -> MarkedFish:
        return phi(x)

    def to_tree(self, y: MarkedFish):
        return phi_inv(y)

    def tree_key(self, x) -> str:
        return tree_code(x)


class LeftTreeBijection(BaseBijection):
    """Left ternary trees with n nodes <-> fish of size n"""

    name = 'left'

    def tree_side(self, n: int) -> Iterator:
        from enumeration.generators import gen_left
        return gen_left(n)

    def fish_side(self, n: int) -> Iterator[Fish]:
        from enumeration.generators import gen_fish
        return gen_fish(n)

    def to_fish(self, x) -> Fish:
        return phi_left(x)

    def to_tree(self, y: Fish):
        return phi_left_inv(y)

    def fish_key(self, y: Fish) -> bytes:
        return y.code

    def tree_key(self, x) -> str:
        return tree_code(x)


class TailsBijection(BaseBijection):
    """Fish of size n with a marked tail <-> pairs of ternary trees with n-1 nodes"""

    name = 'tails'

    def tree_side(self, n: int) -> Iterator[TreePair]:
        from enumeration.generators import gen_pairs
        return gen_pairs(n - 1)

    def fish_side(self, n: int) -> Iterator[Tuple[Fish, int]]:
        from enumeration.generators import gen_fish
        for f in gen_fish(n):
            for t in tails(f):
                yield f, t

    def to_fish(self, x: TreePair) -> Tuple[Fish, int]:
        return pair_to_tailed_fish(x)

    def to_tree(self, y: Tuple[Fish, int]) -> TreePair:
        return tails_to_pair(*y)

    def fish_key(self, y: Tuple[Fish, int]) -> Tuple[bytes, int]:
        return tailed_key(*y)

    def tree_key(self, x: TreePair) -> Tuple[str, str]:
        return x.codes()


class SymmetricBijection(BaseBijection):
    """Symmetric fish of size 2n+1 <-> pairs of ternary trees with n nodes"""

    name = 'symmetric'

    def tree_side(self, n: int) -> Iterator[TreePair]:
        from enumeration.generators import gen_pairs
        return gen_pairs(n)

    def fish_side(self, n: int) -> Iterator[Fish]:
        from enumeration.generators import gen_fish
        return (f for f in gen_fish(2 * n + 1) if is_symmetric(f))

    def to_fish(self, x: TreePair) -> Fish:
        return pair_to_symmetric(x)

    def to_tree(self, y: Fish) -> TreePair:
        return symmetric_to_pair(y)

    def fish_key(self, y: Fish) -> bytes:
        return y.code

    def tree_key(self, x: TreePair) -> Tuple[str, str]:
        return x.codes()


# Registry of available bijections
BIJECTIONS = {
    'marked': MarkedFishBijection,
    'left': LeftTreeBijection,
    'tails': TailsBijection,
    'symmetric': SymmetricBijection,
}
