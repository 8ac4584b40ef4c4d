"""Fighting fish data model"""
from fishcore.fish import (
    Cell,
    CellCoord,
    Fish,
    Orientation,
    StemKind,
    StripRef,
    branch_cells,
    canonical_code,
    canonicalize,
    cell_at_path,
    cell_coords,
    conjugate,
    conjugate_cell,
    decode,
    double_sites,
    fish_from_json,
    fish_to_json,
    glue_double,
    glue_lower,
    glue_upper,
    growth_script,
    is_symmetric,
    is_tail,
    jaw,
    new_head,
    size,
    stem_cells,
    strip_of,
    strips,
    tails,
)
from fishcore.fin import fin_length

__all__ = [
    'Cell', 'CellCoord', 'Fish', 'Orientation', 'StemKind', 'StripRef',
    'branch_cells', 'canonical_code', 'canonicalize', 'cell_at_path', 'cell_coords', 'conjugate',
    'conjugate_cell', 'decode', 'double_sites', 'fish_from_json', 'fish_to_json',
    'glue_double', 'glue_lower', 'glue_upper', 'growth_script', 'is_symmetric',
    'is_tail', 'jaw', 'new_head', 'size', 'stem_cells', 'strip_of', 'strips',
    'tails', 'fin_length',
]
