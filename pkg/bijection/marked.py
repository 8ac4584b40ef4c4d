"""
Marked Fish Bijection
Ternary trees of size n <-> fish of size n with a marked descending strip
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from bijection.construction import construct
from bijection.stem_tree import stem_tree
from fishcore.fish import (
    Fish,
    Orientation,
    StripRef,
    canonicalize,
    conjugate,
    fish_from_json,
    jaw,
    strip_of,
    strips,
)
from ternary.labeling import Direction, order_children, to_stem_tree
from ternary.tree import TernaryTree, Tree
from utils.errors import BadStripIndex, EmptyTree, FishBijError, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MarkedFish:
    """A fish together with one of its descending strips"""
    fish: Fish
    mark: StripRef

    def __post_init__(self):
        if self.mark.orientation is not Orientation.DESCENDING:
            raise BadStripIndex("the mark must be a descending strip")
        if strip_of(self.fish, self.mark.first, Orientation.DESCENDING) != self.mark:
            raise BadStripIndex("the mark is not a maximal descending strip of the fish")

    @property
    def strip_index(self) -> int:
        """Position of the mark among the descending strips in canonical order"""
        return strips(self.fish, Orientation.DESCENDING).index(self.mark)

    def key(self) -> Tuple[bytes, int]:
        return self.fish.code, self.strip_index

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarkedFish):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


def mark_by_index(f: Fish, index: int) -> MarkedFish:
    """Mark the index-th descending strip (canonical order)"""
    descending = strips(f, Orientation.DESCENDING)
    if not isinstance(index, int) or not 0 <= index < len(descending):
        raise BadStripIndex(
            f"strip index {index} out of range; the fish has {len(descending)} descending strips"
        )
    return MarkedFish(f, descending[index])


def marked_fish(f: Fish) -> List[MarkedFish]:
    return [MarkedFish(f, q) for q in strips(f, Orientation.DESCENDING)]


def phi(t: Tree) -> MarkedFish:
    """
    Label t from an E root, build its fish and mark the descending strip of
    the root's cell. The returned fish uses canonical ids.
    """
    if t is None:
        raise EmptyTree("phi needs a non-empty tree")
    raw, annotated = construct(to_stem_tree(t, Direction.E))
    fish, index = canonicalize(raw)
    return MarkedFish(fish, strip_of(fish, index[annotated.cell], Orientation.DESCENDING))


def phi_inv(m: MarkedFish) -> TernaryTree:
    return order_children(stem_tree(m.fish, m.mark))


def two_to_n_plus_one(f: Fish) -> Tuple[List[TernaryTree], List[TernaryTree]]:
    """
    The n+1 trees attached to a fish of size n: one per descending strip of f
    and one per ascending strip, read as a descending strip of the conjugate.
    """
    from_descending = [phi_inv(m) for m in marked_fish(f)]
    g = conjugate(f)
    from_ascending = [
        phi_inv(MarkedFish(g, strip_of(g, q.first, Orientation.DESCENDING)))
        for q in strips(f, Orientation.ASCENDING)
    ]
    return from_descending, from_ascending


def load_fish(data) -> Fish:
    """
    Decode fish JSON and make sure it is a constructible fish.

    A complex is accepted when rebuilding it from its own stem tree gives it
    back, which holds exactly for fighting fish.
    """
    f = fish_from_json(data)
    try:
        rebuilt = phi(phi_inv(MarkedFish(f, jaw(f)))).fish
    except (FishBijError, RecursionError) as e:
        raise ParseError(f"not a fighting fish: {e}")
    if rebuilt != f:
        raise ParseError("not a fighting fish: the complex is not reproduced by its stem tree")
    canon, _ = canonicalize(f)
    logger.debug(f"Validated fish with {len(canon)} cells")
    return canon
