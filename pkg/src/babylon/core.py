"""Color-generic Babylon rules.

A position is a multiset of stacks.  The only facts about a stack that can
still influence play are the color of its top chip and its height, so a
stack is represented by the class ``(color, height)`` and a position by a
multiset of such classes.  Two stacks may be combined when they share a
color or a height; the player unable to move loses.

All values here are immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Iterable, Iterator

RED = 0
BLUE = 1

COLOR_LABELS = ("r", "b", "g", "y")


def color_label(color: int) -> str:
    """Short printable label for a color index."""
    if 0 <= color < len(COLOR_LABELS):
        return COLOR_LABELS[color]
    return f"c{color}"


class Player(Enum):
    """Mover roles; FIRST is conventionally called Alice, SECOND Bob."""

    FIRST = "first"
    SECOND = "second"

    @property
    def other(self) -> "Player":
        return Player.SECOND if self is Player.FIRST else Player.FIRST

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Move:
    """Place the stack class ``source`` on top of ``destination``."""

    source: tuple[int, int]
    destination: tuple[int, int]

    @property
    def result_class(self) -> tuple[int, int]:
        return (self.source[0], self.source[1] + self.destination[1])

    def reflected(self) -> "Move":
        """The same move with colors 0 and 1 exchanged."""
        s, d = self.source, self.destination
        return Move((1 - s[0], s[1]), (1 - d[0], d[1]))


class IllegalMoveError(ValueError):
    """Raised when a move violates a legality clause; names the clause."""

    def __init__(self, move: Move, clause: str):
        self.move = move
        self.clause = clause
        super().__init__(f"illegal move {move.source}>{move.destination}: {clause}")


class GameState:
    """Immutable multiset of stack classes.

    ``classes`` is a sorted tuple of ``((color, height), multiplicity)``
    entries with no duplicate ``(color, height)`` keys.
    """

    __slots__ = ("classes", "_hash")

    def __init__(self, stacks: Iterable[tuple[int, int]] = (), *, _classes=None):
        if _classes is not None:
            object.__setattr__(self, "classes", _classes)
        else:
            counts: dict[tuple[int, int], int] = {}
            for color, height in stacks:
                if height < 1:
                    raise ValueError(f"stack height must be >= 1, got {height}")
                if color < 0:
                    raise ValueError(f"color index must be >= 0, got {color}")
                key = (color, height)
                counts[key] = counts.get(key, 0) + 1
            object.__setattr__(
                self, "classes", tuple(sorted((k, m) for k, m in counts.items()))
            )
        object.__setattr__(self, "_hash", hash(self.classes))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("GameState is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, GameState) and self.classes == other.classes

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = ",".join(
            f"{color_label(c)}{h}x{m}" for (c, h), m in self.classes
        )
        return f"GameState({parts})"

    # -- basic derived quantities ------------------------------------------

    @property
    def total_chips(self) -> int:
        return sum(h * m for (_, h), m in self.classes)

    @property
    def stack_count(self) -> int:
        return sum(m for _, m in self.classes)

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(sorted({c for (c, _), _ in self.classes}))

    @property
    def color_count(self) -> int:
        return len(self.colors)

    def multiplicity(self, color: int, height: int) -> int:
        for (c, h), m in self.classes:
            if (c, h) == (color, height):
                return m
        return 0

    def heights(self, color: int) -> tuple[int, ...]:
        """All stack heights of one color, ascending, with repetition."""
        out: list[int] = []
        for (c, h), m in self.classes:
            if c == color:
                out.extend([h] * m)
        return tuple(out)

    def stacks(self) -> Iterator[tuple[int, int]]:
        for (c, h), m in self.classes:
            for _ in range(m):
                yield (c, h)

    # -- rules --------------------------------------------------------------

    @staticmethod
    def initial(color_counts: Iterable[int]) -> "GameState":
        """All-singleton start: ``color_counts[i]`` chips of color ``i``."""
        stacks = []
        for color, count in enumerate(color_counts):
            if count < 0:
                raise ValueError("chip counts must be >= 0")
            stacks.extend([(color, 1)] * count)
        if not stacks:
            raise ValueError("at least one chip is required")
        return GameState(stacks)

    def check_move(self, move: Move) -> None:
        """Raise IllegalMoveError naming the violated clause, if any."""
        src, dst = move.source, move.destination
        if self.multiplicity(*src) == 0:
            raise IllegalMoveError(move, "source class not present")
        if src == dst:
            if self.multiplicity(*src) < 2:
                raise IllegalMoveError(
                    move, "source equals destination but multiplicity is 1"
                )
        elif self.multiplicity(*dst) == 0:
            raise IllegalMoveError(move, "destination class not present")
        if src[0] != dst[0] and src[1] != dst[1]:
            raise IllegalMoveError(move, "stacks differ in both color and height")

    def is_legal(self, move: Move) -> bool:
        try:
            self.check_move(move)
        except IllegalMoveError:
            return False
        return True

    def legal_moves(self) -> list[Move]:
        """All legal class-level moves, sorted by (source, destination)."""
        keys = [k for k, _ in self.classes]
        moves = []
        for src in keys:
            for dst in keys:
                if src == dst and self.multiplicity(*src) < 2:
                    continue
                if src[0] == dst[0] or src[1] == dst[1]:
                    moves.append(Move(src, dst))
        return moves

    def apply_move(self, move: Move) -> "GameState":
        """Successor state; total chips constant, stack count down by one."""
        self.check_move(move)
        counts = {k: m for k, m in self.classes}
        for key in (move.source, move.destination):
            counts[key] -= 1
            if counts[key] == 0:
                del counts[key]
        res = move.result_class
        counts[res] = counts.get(res, 0) + 1
        return GameState(_classes=tuple(sorted(counts.items())))

    def undo_move(self, move: Move) -> "GameState":
        """Predecessor state for a move that produced this state."""
        counts = {k: m for k, m in self.classes}
        res = move.result_class
        if counts.get(res, 0) == 0:
            raise ValueError(f"cannot undo {move}: result class missing")
        counts[res] -= 1
        if counts[res] == 0:
            del counts[res]
        for key in (move.source, move.destination):
            counts[key] = counts.get(key, 0) + 1
        prev = GameState(_classes=tuple(sorted(counts.items())))
        prev.check_move(move)
        return prev

    def is_terminal(self) -> bool:
        return not self.legal_moves()

    def mover(self) -> Player:
        """First mover acts from states where n - stack_count is even."""
        if (self.total_chips - self.stack_count) % 2 == 0:
            return Player.FIRST
        return Player.SECOND

    def reflected(self) -> "GameState":
        """Colors 0 and 1 exchanged (two-color states only)."""
        if any(c > 1 for c in self.colors):
            raise ValueError("reflection is defined for two-color states")
        return GameState(
            _classes=tuple(
                sorted((((1 - c, h), m) for (c, h), m in self.classes))
            )
        )

    def canonical_key(self) -> tuple:
        """Equal keys iff equal up to a permutation of colors.

        The key is the least color relabeling of the class list; win/loss
        only depends on move structure, which color permutation preserves.
        """
        groups: dict[int, list[int]] = {}
        for (c, h), m in self.classes:
            groups.setdefault(c, []).extend([h] * m)
        height_tuples = [tuple(sorted(hs)) for hs in groups.values()]
        return tuple(sorted(height_tuples))


def random_pair_agrees(state: GameState, src: tuple[int, int], dst: tuple[int, int]) -> bool:
    """Membership predicate used by tests: pair is legal iff listed."""
    move = Move(src, dst)
    return state.is_legal(move) == (move in state.legal_moves())


def all_states(n: int, max_colors: int | None = None) -> Iterator[GameState]:
    """Every state with exactly ``n`` chips, one representative per
    color-permutation class (canonical keys are pairwise distinct).

    Enumerates multisets of per-color height multisets.  Used by the
    oracle cross-check and by exhaustive rule tests.
    """

    def partitions(total: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, max_part), 0, -1):
            for rest in partitions(total - first, first):
                yield (first,) + rest

    def color_groups(
        total: int, bound: tuple[int, ...] | None, colors_left: int | None
    ) -> Iterator[tuple[tuple[int, ...], ...]]:
        if total == 0:
            yield ()
            return
        if colors_left is not None and colors_left == 0:
            return
        for sub in range(1, total + 1):
            for part in partitions(sub, sub):
                if bound is not None and part > bound:
                    continue
                left = colors_left - 1 if colors_left is not None else None
                for rest in color_groups(total - sub, part, left):
                    yield (part,) + rest

    for groups in color_groups(n, None, max_colors):
        stacks = []
        for color, heights in enumerate(groups):
            stacks.extend((color, h) for h in heights)
        yield GameState(stacks)


def color_permutations(state: GameState) -> Iterator[GameState]:
    """All relabelings of the state's colors (testing helper)."""
    colors = state.colors
    for perm in permutations(colors):
        mapping = dict(zip(colors, perm))
        yield GameState((mapping[c], h) for c, h in state.stacks())
