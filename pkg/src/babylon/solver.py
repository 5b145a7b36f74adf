"""Exact win/loss solver under the last-player-wins convention.

``solve`` runs a memoized depth-first search over canonical keys, so a
position and any color relabeling of it share one table entry.  The
player on move is derived from chip and stack counts and is therefore
not part of the key.  ``reference_winner`` is a deliberately plain,
unmemoized recursion kept as an independent oracle.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .core import GameState, Move, Player

DEFAULT_BOUND_TWO_COLOR = 24
DEFAULT_BOUND_MULTI_COLOR = 16
BOUND_ENV_VAR = "BABYLON_SOLVER_BOUND"


class SolverBoundExceeded(RuntimeError):
    """State is larger than the configured search bound."""


def solver_bound(color_count: int) -> int:
    """Effective chip-count bound, honoring the environment override."""
    override = os.environ.get(BOUND_ENV_VAR)
    if override:
        return int(override)
    if color_count <= 2:
        return DEFAULT_BOUND_TWO_COLOR
    return DEFAULT_BOUND_MULTI_COLOR


def check_bound(state: GameState) -> None:
    bound = solver_bound(state.color_count)
    if state.total_chips > bound:
        raise SolverBoundExceeded(
            f"{state.total_chips} chips exceeds the solver bound {bound}; "
            f"set {BOUND_ENV_VAR} to raise it"
        )


@dataclass(frozen=True)
class Outcome:
    """Winner of a position under best play by both sides."""

    winner: Player

    @property
    def second_player_wins(self) -> bool:
        return self.winner is Player.SECOND


@dataclass
class TranspositionTable:
    """Canonical-key map to mover-wins booleans with hit/miss counters."""

    entries: dict = field(default_factory=dict)
    hits: int = 0
    misses: int = 0

    def __len__(self) -> int:
        return len(self.entries)


_shared_table = TranspositionTable()


def _mover_wins(state: GameState, table: TranspositionTable) -> bool:
    key = state.canonical_key()
    cached = table.entries.get(key)
    if cached is not None:
        table.hits += 1
        return cached
    table.misses += 1
    result = False
    for move in state.legal_moves():
        if not _mover_wins(state.apply_move(move), table):
            result = True
            break
    table.entries[key] = result
    return result


def solve(state: GameState, table: TranspositionTable | None = None) -> Outcome:
    """Winner of ``state`` with best play; memoized."""
    check_bound(state)
    table = table if table is not None else _shared_table
    mover = state.mover()
    winner = mover if _mover_wins(state, table) else mover.other
    return Outcome(winner)


def is_safe(state: GameState, table: TranspositionTable | None = None) -> bool:
    """True iff the second mover wins the position."""
    return solve(state, table).second_player_wins


def optimal_moves(state: GameState, table: TranspositionTable | None = None) -> list[Move]:
    """The legal moves whose successor loses for the player then on move.

    Empty exactly when the position is lost for the mover.
    """
    check_bound(state)
    if state.is_terminal():
        raise ValueError("optimal_moves requires a non-terminal state")
    table = table if table is not None else _shared_table
    return [
        move
        for move in state.legal_moves()
        if not _mover_wins(state.apply_move(move), table)
    ]


def reference_winner(state: GameState) -> Player:
    """Plain recursive oracle: no memo table, no canonicalization."""

    def mover_wins(s: GameState) -> bool:
        moves = s.legal_moves()
        return any(not mover_wins(s.apply_move(m)) for m in moves)

    mover = state.mover()
    return mover if mover_wins(state) else mover.other


@dataclass(frozen=True)
class StateSpaceStats:
    """Reachability counts from an all-singleton start."""

    total_chips: int
    color_counts: tuple[int, ...]
    reachable_states: int
    solver_entries: int


def state_space_stats(color_counts: tuple[int, ...]) -> StateSpaceStats:
    """Breadth-first reachability census plus solver table footprint."""
    start = GameState.initial(color_counts)
    check_bound(start)
    seen = {start.canonical_key()}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for move in state.legal_moves():
                succ = state.apply_move(move)
                key = succ.canonical_key()
                if key not in seen:
                    seen.add(key)
                    nxt.append(succ)
        frontier = nxt
    table = TranspositionTable()
    solve(start, table)
    return StateSpaceStats(
        total_chips=start.total_chips,
        color_counts=tuple(color_counts),
        reachable_states=len(seen),
        solver_entries=len(table),
    )
