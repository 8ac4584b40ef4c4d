"""SVG rendering of fish and trees"""

from render.svg import render_fish, render_tree, tree_positions

__all__ = ['render_fish', 'render_tree', 'tree_positions']
