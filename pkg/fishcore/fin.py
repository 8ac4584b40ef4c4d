"""
Fin Walk
Boundary length from the head's left point to the right point of the first tail
"""
import logging

from fishcore.fish import Fish, is_tail
from utils.errors import FishBijError

logger = logging.getLogger(__name__)

# Corners of a cell: L(eft), T(op), R(ight), B(ottom)
ENDPOINTS = {
    'lu': ('L', 'T'),
    'll': ('L', 'B'),
    'ru': ('T', 'R'),
    'rl': ('B', 'R'),
}

# Edge -> (partner edge on the neighbour, corner identification across the gluing)
GLUED_CORNERS = {
    'ru': ('ll', {'T': 'L', 'R': 'B'}),
    'rl': ('lu', {'B': 'L', 'R': 'T'}),
    'lu': ('rl', {'L': 'B', 'T': 'R'}),
    'll': ('ru', {'L': 'T', 'B': 'R'}),
}


def _other_edge(corner: str, edge: str) -> str:
    for candidate, ends in ENDPOINTS.items():
        if candidate != edge and corner in ends:
            return candidate
    raise FishBijError(f"no second edge at corner {corner}")


def _far_end(edge: str, corner: str) -> str:
    a, b = ENDPOINTS[edge]
    return b if corner == a else a


def fin_length(f: Fish) -> int:
    """
    Count boundary edges walked counterclockwise from the left point of the head.

    The walk starts down the head's free left lower edge and keeps the surface
    on its left: at every vertex it leaves by the next edge of the same cell,
    stepping across gluings until it finds a free edge. It ends on arriving at
    the right point of a tail.
    """
    cell, corner, incoming = f.head, 'B', 'll'
    edges = 1
    limit = 16 * len(f.cells) + 4
    for _ in range(limit):
        if corner == 'R' and is_tail(f, cell):
            return edges
        edge = _other_edge(corner, incoming)
        neighbour = getattr(f.cells[cell], edge)
        if neighbour is None:
            corner = _far_end(edge, corner)
            incoming = edge
            edges += 1
        else:
            partner, corners = GLUED_CORNERS[edge]
            corner = corners[corner]
            incoming = partner
            cell = neighbour
    raise FishBijError("fin walk did not reach a tail")
