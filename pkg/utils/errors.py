"""
Domain Errors
Exceptions raised by the fish, tree and bijection layers
"""
from typing import Optional


class FishBijError(ValueError):
    """Base class for every error this package raises on purpose"""

    exit_code = 3


class BadCell(FishBijError):
    """A cell id is out of range for the fish it addresses"""


class EdgeOccupied(FishBijError):
    """A gluing targets an edge that is already glued"""


class NotDoubleSite(FishBijError):
    """Two cells do not form the (c, a, b) configuration a double gluing needs"""


class EmptyTree(FishBijError):
    """An operation that needs at least one node received the empty tree"""


class ParseError(FishBijError):
    """Malformed tree code or fish JSON"""

    exit_code = 2

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InconsistentLabels(FishBijError):
    """A stem tree carries a child label its parent does not permit"""


class NotLeftTree(FishBijError):
    """A tree has a node with negative abscissa"""

    def __init__(self, node: str, abscissa: int):
        super().__init__(
            f"not a left tree: node '{node or 'root'}' has abscissa {abscissa}"
        )
        self.node = node
        self.abscissa = abscissa


class NotATail(FishBijError):
    """The marked cell does not have two free right edges"""


class NotSymmetric(FishBijError):
    """The fish differs from its conjugate"""


class BadPairTotal(FishBijError):
    """A tree pair does not have the node total the caller asked for"""


class BadStripIndex(FishBijError):
    """A strip index does not address a descending strip of the fish"""


class UnknownStatistic(FishBijError):
    """A census statistic is not in the registry for its family"""

    exit_code = 2


class UnknownFamily(FishBijError):
    """A census or count family is not registered"""

    exit_code = 2


class OracleLimit(FishBijError):
    """The growth oracle was asked for a size above its configured cap"""

    exit_code = 2


class InexactDivision(FishBijError):
    """A closed-form division left a remainder"""
