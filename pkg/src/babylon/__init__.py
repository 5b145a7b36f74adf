"""Babylon: rules, exact solver, scripted strategies, and verification."""

from .codec import (
    CodecError,
    ShapeDescriptor,
    format_move,
    format_state,
    parse_move,
    parse_state,
)
from .core import (
    BLUE,
    GameState,
    IllegalMoveError,
    Move,
    Player,
    RED,
)
from .solver import (
    Outcome,
    SolverBoundExceeded,
    StateSpaceStats,
    TranspositionTable,
    is_safe,
    optimal_moves,
    reference_winner,
    solve,
    state_space_stats,
)
from .strategy import (
    BobMemory,
    GameConfig,
    StrategyDecision,
    StrategyError,
    WAVED_FALLBACK_TAGS,
    alice_move,
    bob_move,
    classify_one_color,
    classify_reason,
    classify_winner,
    even_hill_reply,
    initial_bob_memory,
    is_target_state,
    lemma2_move,
    lemma3_reply,
    lemma4_reply,
    lemma_applies,
    opening_move,
)

__all__ = [
    "BLUE",
    "BobMemory",
    "CodecError",
    "GameConfig",
    "GameState",
    "IllegalMoveError",
    "Move",
    "Outcome",
    "Player",
    "RED",
    "ShapeDescriptor",
    "SolverBoundExceeded",
    "StateSpaceStats",
    "StrategyDecision",
    "StrategyError",
    "TranspositionTable",
    "WAVED_FALLBACK_TAGS",
    "alice_move",
    "bob_move",
    "classify_one_color",
    "classify_reason",
    "classify_winner",
    "even_hill_reply",
    "format_move",
    "format_state",
    "initial_bob_memory",
    "is_safe",
    "is_target_state",
    "lemma2_move",
    "lemma3_reply",
    "lemma4_reply",
    "lemma_applies",
    "opening_move",
    "optimal_moves",
    "parse_move",
    "parse_state",
    "reference_winner",
    "solve",
    "state_space_stats",
]

__version__ = "0.1.0"
