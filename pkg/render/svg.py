"""
SVG Rendering
Draws fish as overlapping 45-degree cells and trees with abscissa as horizontal position
"""
import logging
from typing import Dict, Tuple

from lxml import etree

from fishcore.fish import Fish, StemKind, cell_coords, stem_cells
from ternary.labeling import label_tree
from ternary.tree import Tree, address_abscissa, nodes
from utils.errors import EmptyTree

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"


def _svg_root(width: float, height: float) -> etree._Element:
    return etree.Element(
        f"{{{SVG_NS}}}svg",
        nsmap={None: SVG_NS},
        width=f"{width:g}",
        height=f"{height:g}",
        viewBox=f"0 0 {width:g} {height:g}",
    )


def _sub(parent: etree._Element, tag: str, **attrs) -> etree._Element:
    return etree.SubElement(parent, f"{{{SVG_NS}}}{tag}", {k.replace('_', '-'): str(v) for k, v in attrs.items()})


def _serialize(root: etree._Element) -> bytes:
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding='UTF-8')


def render_fish(f: Fish, style: Dict) -> bytes:
    """
    One diamond per cell at its lattice position.

    Cells are translucent so that cells of different sheets sharing a
    position stay visible; stem cells carry a dotted marker.
    """
    s = style['cell_size']
    margin = style['margin']
    colors = style['colors']
    coords = cell_coords(f)
    stems = stem_cells(f)

    xs = [c.x for c in coords.values()]
    ys = [c.y for c in coords.values()]
    min_x, max_x, min_y, max_y = min(xs), max(xs), min(ys), max(ys)
    width = (max_x - min_x + 2) * s + 2 * margin
    height = (max_y - min_y + 2) * s + 2 * margin

    def centre(c: int) -> Tuple[float, float]:
        coord = coords[c]
        return margin + (coord.x - min_x + 1) * s, margin + (max_y - coord.y + 1) * s

    root = _svg_root(width, height)
    cells = _sub(root, 'g', id='cells')
    markers = _sub(root, 'g', id='stems')
    for c in f.bfs_order:
        cx, cy = centre(c)
        kind = stems.get(c)
        if c == f.head:
            fill = colors['head']
        elif kind is StemKind.TAIL:
            fill = colors['tail']
        elif kind is StemKind.BRANCH:
            fill = colors['branch']
        else:
            fill = colors['cell']
        points = f"{cx - s:g},{cy:g} {cx:g},{cy - s:g} {cx + s:g},{cy:g} {cx:g},{cy + s:g}"
        _sub(cells, 'polygon', points=points, fill=fill, fill_opacity=style['fill_opacity'],
             stroke=colors['edge'], stroke_width=1, data_cell=c)
        if kind is not None:
            _sub(markers, 'circle', cx=f"{cx:g}", cy=f"{cy:g}", r=f"{s / 3:g}", fill='none',
                 stroke=colors['stem_marker'], stroke_dasharray='2,2', data_cell=c)
    logger.debug(f"Rendered fish with {len(f.cells)} cells")
    return _serialize(root)


def tree_positions(t: Tree, style: Dict) -> Dict[str, Tuple[float, float]]:
    """Node centres: larger abscissa further left, one row per depth"""
    if t is None:
        raise EmptyTree("cannot render the empty tree")
    step_x, step_y, margin = style['tree_step_x'], style['tree_step_y'], style['margin']
    alphas = {addr: address_abscissa(addr) for addr, _ in nodes(t)}
    top = max(alphas.values())
    return {
        addr: (margin + (top - alpha) * step_x, margin + len(addr) * step_y)
        for addr, alpha in alphas.items()
    }


def render_tree(t: Tree, style: Dict, labels: bool = True) -> bytes:
    """Draw a ternary tree top-down; node labels are their compass directions"""
    positions = tree_positions(t, style)
    colors = style['colors']
    radius = style['node_radius']
    width = max(x for x, _ in positions.values()) + style['margin']
    height = max(y for _, y in positions.values()) + style['margin']

    root = _svg_root(width, height)
    edges = _sub(root, 'g', id='edges')
    vertices = _sub(root, 'g', id='nodes')
    for addr, (x, y) in sorted(positions.items()):
        if addr:
            px, py = positions[addr[:-1]]
            _sub(edges, 'line', x1=f"{px:g}", y1=f"{py:g}", x2=f"{x:g}", y2=f"{y:g}",
                 stroke=colors['tree_edge'], stroke_width=1.5)
    direction = label_tree(t) if labels else {}
    for addr, (x, y) in sorted(positions.items()):
        _sub(vertices, 'circle', cx=f"{x:g}", cy=f"{y:g}", r=radius, fill=colors['cell'],
             stroke=colors['edge'], data_node=addr or 'root')
        if addr in direction:
            text = _sub(vertices, 'text', x=f"{x + radius + 2:g}", y=f"{y - radius:g}",
                        fill=colors['label'], font_size=10, font_family='sans-serif')
            text.text = direction[addr].value
    return _serialize(root)
