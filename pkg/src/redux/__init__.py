"""Reduced decompositions, commutation classes, and tilings of Elnitsky's
polygon, with brute-force verification utilities at small sizes."""

from .permcore import (
    Perm,
    check_perm,
    code_and_shape,
    diagram,
    format_perm,
    identity,
    inversions,
    left_mult_adjacent,
    length,
    longest_element,
    parse_perm,
    right_mult_adjacent,
    syt_count,
)
from .patterns import (
    Occurrence,
    ObstructionReport,
    analyze_321,
    in_U_n,
    in_U_n_j,
    is_freely_braided,
    is_vexillary,
    obstruction,
    occurrences,
)
from .redwords import (
    BudgetError,
    Word,
    braid_moves,
    enumerate_R,
    evaluate,
    find_shift_factor,
    format_word,
    is_isolated,
    parse_word,
    shift,
)
from .commutation import (
    CommutationClass,
    FlipGraph,
    classes,
    cycle_space_generated_by_4_8_cycles,
    graph,
    graphs_isomorphic,
    is_path,
    is_tree,
    reverse,
    rotate_prefix,
    rotate_suffix,
)
from .vexalg import (
    VexResult,
    embed_reduced_word,
    nonvex_witness,
    verify_characterization,
    vex,
)
from .tilings import (
    Polygon,
    Tile,
    Tiling,
    TilingPoset,
    build_polygon,
    decreasing_tile_check,
    eln,
    enumerate_rhombic,
    enumerate_zonotopal,
    flip_graph_from_tilings,
    freely_braided_structure,
    has_unique_max,
    level2_cycle_correspondence,
    mono,
    poset,
    tiling_from_word,
    uniform_2k_tiling_exists,
)
from .verify import VerifyResult, run as verify_theorem

__all__ = [name for name in dir() if not name.startswith("_")]
