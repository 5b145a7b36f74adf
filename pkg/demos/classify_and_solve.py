"""A tour of the classifier and the exact solver.

Prints the winner table for small two-color games, solves the
commercial four-color configuration, and reports how small the search
really is.
"""

from babylon import GameState, classify_winner, solve, state_space_stats
from babylon.codec import parse_state
from babylon.solver import is_safe

print("Winner of <p,q;;> for 1 <= p <= q, p+q <= 12")
print("(second-player win exactly when p+q is even and p >= 3)\n")
header = "p\\q " + "".join(f"{q:>7}" for q in range(1, 12))
print(header)
for p in range(1, 7):
    cells = []
    for q in range(1, 12):
        if q < p or p + q > 12:
            cells.append(f"{'':>7}")
        else:
            cells.append(f"{str(classify_winner(p, q)):>7}")
    print(f"{p:<4}" + "".join(cells))

print("\nThe boxed configuration, twelve chips in four colors:")
commercial = GameState.initial((3, 3, 3, 3))
print(f"  winner with best play: the {solve(commercial).winner} player")

print("\nA few hand-size positions:")
for text in ("<3,9;;>", "<2,6;;>", "<2,2;2;2>", "<2,4;4;2>"):
    state = parse_state(text)
    word = "second (safe)" if is_safe(state) else "first"
    print(f"  {text:<12} -> {word}")

print("\nWhy this is fast: canonical states reachable from a few starts")
for counts in ((2, 2), (4, 4), (6, 6), (3, 3, 3, 3)):
    stats = state_space_stats(counts)
    print(
        f"  {str(counts):<14} {stats.reachable_states:>6} reachable, "
        f"{stats.solver_entries:>6} solved"
    )
