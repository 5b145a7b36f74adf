"""Rules-level tests: legality, application, parity, canonicalization."""

import pytest
from hypothesis import given, settings, strategies as st

from babylon.core import (
    BLUE,
    GameState,
    IllegalMoveError,
    Move,
    Player,
    RED,
    all_states,
    color_permutations,
)


def state_of(*stacks):
    return GameState(stacks)


def brute_force_moves(state):
    """Independent legality oracle: filter all ordered class pairs."""
    keys = [k for k, _ in state.classes]
    out = []
    for src in keys:
        for dst in keys:
            if src == dst and state.multiplicity(*src) < 2:
                continue
            if src[0] == dst[0] or src[1] == dst[1]:
                out.append(Move(src, dst))
    return sorted(out)


small_states = st.lists(
    st.tuples(st.integers(0, 2), st.integers(1, 5)), min_size=1, max_size=7
).map(GameState)


class TestLegalMoves:
    def test_two_singletons_both_orders(self):
        state = state_of((RED, 1), (BLUE, 1))
        assert state.legal_moves() == [
            Move((RED, 1), (BLUE, 1)),
            Move((BLUE, 1), (RED, 1)),
        ]

    def test_different_color_and_height_blocked(self):
        state = state_of((RED, 3), (BLUE, 2))
        assert state.legal_moves() == []

    def test_two_two_two_two_has_ten_moves(self):
        # frozen from the ordered-pair oracle below
        state = state_of((RED, 1), (RED, 1), (BLUE, 1), (BLUE, 1), (RED, 2), (BLUE, 2))
        moves = state.legal_moves()
        assert len(moves) == 10
        assert moves == brute_force_moves(state)

    @given(small_states)
    def test_agrees_with_pair_oracle(self, state):
        assert state.legal_moves() == brute_force_moves(state)

    @given(small_states, st.tuples(st.integers(0, 2), st.integers(1, 5)),
           st.tuples(st.integers(0, 2), st.integers(1, 5)))
    def test_membership_matches_is_legal(self, state, src, dst):
        move = Move(src, dst)
        assert state.is_legal(move) == (move in state.legal_moves())


class TestApplyMove:
    def test_merge_two_singletons(self):
        state = state_of((RED, 1), (RED, 1))
        after = state.apply_move(Move((RED, 1), (RED, 1)))
        assert after == state_of((RED, 2))

    def test_hill_capture(self):
        state = state_of(*([(RED, 1)] * 4 + [(BLUE, 1)] * 4 + [(RED, 2), (BLUE, 2)]))
        after = state.apply_move(Move((RED, 2), (BLUE, 2)))
        assert after.heights(RED) == (1, 1, 1, 1, 4)
        assert after.heights(BLUE) == (1, 1, 1, 1)

    def test_same_color_different_heights(self):
        state = state_of((RED, 1), (RED, 4))
        assert state.apply_move(Move((RED, 1), (RED, 4))) == state_of((RED, 5))

    def test_error_names_clause(self):
        state = state_of((RED, 3), (BLUE, 2))
        with pytest.raises(IllegalMoveError, match="color and height"):
            state.apply_move(Move((RED, 3), (BLUE, 2)))
        with pytest.raises(IllegalMoveError, match="multiplicity"):
            state.apply_move(Move((RED, 3), (RED, 3)))
        with pytest.raises(IllegalMoveError, match="source class not present"):
            state.apply_move(Move((RED, 1), (BLUE, 2)))

    @given(small_states)
    def test_chips_conserved_stacks_drop_by_one(self, state):
        for move in state.legal_moves():
            after = state.apply_move(move)
            assert after.total_chips == state.total_chips
            assert after.stack_count == state.stack_count - 1

    @given(small_states)
    def test_undo_inverts_apply(self, state):
        for move in state.legal_moves():
            assert state.apply_move(move).undo_move(move) == state


class TestTerminalAndMover:
    def test_single_stack_terminal(self):
        assert state_of((RED, 4)).is_terminal()

    def test_two_stack_endings(self):
        assert state_of((RED, 3), (BLUE, 2)).is_terminal()
        assert not state_of((RED, 2), (BLUE, 2)).is_terminal()

    def test_initial_mover_is_first(self):
        assert GameState.initial((3, 9)).mover() is Player.FIRST

    def test_mover_flips_after_a_move(self):
        state = GameState.initial((3, 9))
        after = state.apply_move(Move((RED, 1), (RED, 1)))
        assert after.mover() is Player.SECOND

    def test_mover_from_counts(self):
        # 12 chips in 7 stacks: odd difference, second player to move
        state = state_of(*([(RED, 1)] * 6 + [(BLUE, 6)]))
        assert state.total_chips == 12 and state.stack_count == 7
        assert state.mover() is Player.SECOND

    @given(small_states)
    def test_mover_alternates(self, state):
        mover = state.mover()
        for move in state.legal_moves():
            assert state.apply_move(move).mover() is mover.other


class TestCanonicalKey:
    def test_color_swap_same_key(self):
        a = state_of((RED, 1), (RED, 1), (BLUE, 3))
        b = state_of((BLUE, 1), (BLUE, 1), (RED, 3))
        assert a.canonical_key() == b.canonical_key()

    def test_distinct_multisets_differ(self):
        a = state_of((RED, 1), (RED, 1), (BLUE, 3))
        b = state_of((RED, 1), (BLUE, 3), (BLUE, 3))
        assert a.canonical_key() != b.canonical_key()

    @given(small_states)
    def test_invariant_under_any_permutation(self, state):
        for permuted in color_permutations(state):
            assert permuted.canonical_key() == state.canonical_key()


class TestPlayouts:
    @pytest.mark.parametrize("p,q", [(1, 3), (2, 4), (3, 3), (2, 6), (4, 4), (3, 7)])
    def test_two_color_games_end_with_one_or_two_stacks(self, p, q):
        # equivalently, every completed game has n-1 or n-2 moves
        start = GameState.initial((p, q))
        seen = set()
        stack = [start]
        while stack:
            state = stack.pop()
            if state in seen:
                continue
            seen.add(state)
            moves = state.legal_moves()
            if not moves:
                assert state.stack_count in (1, 2)
                continue
            stack.extend(state.apply_move(m) for m in moves)


def test_all_states_enumerator_counts():
    assert sum(1 for _ in all_states(2)) == 3
    assert sum(1 for _ in all_states(3)) == 6
    keys = [s.canonical_key() for s in all_states(6)]
    assert len(keys) == len(set(keys))
