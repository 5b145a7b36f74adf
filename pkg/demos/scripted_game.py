"""One full game against the scripted second player, annotated.

The first player here is a simple aggressor: it always picks the first
winning move if it has one, else the first legal move. Watch the rule
tags trace the strategy: opening, the even-hill loop, a thin-position
case table, and the endgame routine.
"""

from babylon import GameConfig, bob_move, initial_bob_memory, optimal_moves
from babylon.codec import format_move, format_state


def aggressive_first_player(state):
    wins = optimal_moves(state)
    return sorted(wins)[0] if wins else sorted(state.legal_moves())[0]


config = GameConfig(7, 7)
state = config.initial_state()
memory = initial_bob_memory(config)
print(f"start: {format_state(state, 'paper')}   (7 chips each color)")

ply = 0
while not state.is_terminal():
    ply += 1
    alice = aggressive_first_player(state)
    state = state.apply_move(alice)
    print(f"{ply:>2}. first  {format_move(alice):<8} -> {format_state(state, 'paper')}")
    if state.is_terminal():
        print("first player made the last move!?")
        break
    ply += 1
    decision, memory = bob_move(state, memory.observe(alice))
    state = state.apply_move(decision.move)
    flag = "  (fallback)" if decision.fallback_used else ""
    print(
        f"{ply:>2}. second {format_move(decision.move):<8} -> "
        f"{format_state(state, 'paper'):<18} [{decision.rule_tag}]{flag}"
    )

print(f"\nthe second player made the last move after {ply} plies and wins")
