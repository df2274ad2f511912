"""Exact solving, strategies and classification for the vertex coloring game on forests."""

from .classify import Classification, classify, classify_no_deg3, is_chi_g_2, b_vertex_search
from .enumeration import canonical_form, forests_of_order, is_isomorphic, trees_of_order
from .forest import (
    TRIVIALLY_COVERED,
    Forest,
    Position,
    Trunk,
    build_forest,
    covering_vertex,
    dangerous_vertices,
    distance,
    find_splitter,
    longest_path_length,
    path_between,
    reduced_graph,
    trunks,
)
from .game import (
    ALICE,
    ALICE_WIN,
    BOB,
    BOB_WIN,
    PASS,
    AddExternal,
    ColorVertex,
    GameState,
    Move,
    Player,
    Ruleset,
    Verdict,
    apply_move,
    canonical_key,
    legal_moves,
    terminal,
)
from .solver import (
    Solver,
    TranspositionTable,
    bob_wins_within,
    find_winning_moves,
    game_chromatic_number,
    solve,
)
from .strategies import alice_2color, alice_4mcg, alice_rcg, alice_small_trunk_3mcg, verify_policy
from .textformat import format_position, parse_position

__version__ = "0.1.0"
