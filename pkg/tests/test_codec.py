"""Text grammar tests: both state styles, moves, and round trips."""

import pytest
from hypothesis import given, strategies as st

from babylon.codec import (
    CodecError,
    ShapeDescriptor,
    format_move,
    format_state,
    parse_move,
    parse_state,
)
from babylon.core import BLUE, GameState, Move, RED


class TestParseState:
    def test_angle_form(self):
        state = parse_state("<3,5;4;2>")
        assert state.heights(RED) == (1, 1, 1, 4)
        assert state.heights(BLUE) == (1, 1, 1, 1, 1, 2)

    def test_angle_zero_means_no_hill(self):
        state = parse_state("<5,7;0;2>")
        assert state.heights(RED) == (1,) * 5
        assert state.heights(BLUE) == (1,) * 7 + (2,)

    def test_angle_empty_sections(self):
        assert parse_state("<2,3;;>") == GameState.initial((2, 3))

    def test_angle_multi_hill(self):
        state = parse_state("<1,3;2,2;>")
        assert state.heights(RED) == (1, 2, 2)
        assert state.heights(BLUE) == (1, 1, 1)

    def test_generic_form(self):
        state = parse_state("r:1,1,4|b:2,2")
        assert state.heights(RED) == (1, 1, 4)
        assert state.heights(BLUE) == (2, 2)

    def test_two_singletons(self):
        state = parse_state("r:1|b:1")
        assert state == GameState([(RED, 1), (BLUE, 1)])

    def test_four_color_labels(self):
        state = parse_state("r:1|b:1|g:2|y:3")
        assert state.colors == (0, 1, 2, 3)

    @pytest.mark.parametrize(
        "text",
        ["<1;2>", "<1,2;1;>", "<a,b;;>", "r:", "z:1", "r:0", "r:1|r:2", "<2,2;2;2", ""],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(CodecError):
            parse_state(text)

    def test_error_carries_position(self):
        with pytest.raises(CodecError) as exc:
            parse_state("r:1|x:2")
        assert exc.value.position > 0


class TestFormatState:
    def test_paper_round_trip(self):
        text = "<3,5;4;2>"
        assert format_state(parse_state(text), "paper") == text

    def test_initial_paper_form(self):
        assert format_state(GameState.initial((2, 4)), "paper") == "<2,4;;>"

    def test_hills_sorted_descending(self):
        state = GameState([(RED, 1), (RED, 2), (RED, 4), (BLUE, 1), (BLUE, 3)])
        assert format_state(state, "paper") == "<1,1;4,2;3>"

    def test_generic_of_initial(self):
        assert format_state(GameState.initial((2, 3))) == "r:1,1|b:1,1,1"

    def test_paper_style_needs_two_colors(self):
        with pytest.raises(ValueError):
            format_state(GameState.initial((1, 1, 1)), "paper")

    def test_unknown_style(self):
        with pytest.raises(ValueError):
            format_state(GameState.initial((1, 1)), "fancy")


class TestMoves:
    def test_parse(self):
        assert parse_move("r@1>r@4") == Move((RED, 1), (RED, 4))
        assert parse_move("b@2>r@2") == Move((BLUE, 2), (RED, 2))

    def test_round_trip(self):
        for text in ("r@1>b@1", "b@3>b@9", "g@2>g@2"):
            assert format_move(parse_move(text)) == text

    @pytest.mark.parametrize("text", ["r1>b1", "r@>b@1", "r@0>b@1", "x@1>b@1", "r@1"])
    def test_rejects_malformed(self, text):
        with pytest.raises(CodecError):
            parse_move(text)


class TestShapeDescriptor:
    def test_round_trip_through_state(self):
        state = parse_state("<3,5;4;2>")
        shape = ShapeDescriptor.from_state(state)
        assert shape == ShapeDescriptor(3, 5, (4,), (2,))
        assert shape.to_state() == state


two_color_states = st.lists(
    st.tuples(st.integers(0, 1), st.integers(1, 9)), min_size=1, max_size=8
).map(GameState)

any_states = st.lists(
    st.tuples(st.integers(0, 3), st.integers(1, 9)), min_size=1, max_size=8
).map(GameState)


@given(any_states)
def test_generic_round_trip(state):
    assert parse_state(format_state(state, "generic")) == state


@given(two_color_states)
def test_paper_round_trip_two_color(state):
    assert parse_state(format_state(state, "paper")) == state


@given(two_color_states)
def test_move_round_trip_over_legal_moves(state):
    for move in state.legal_moves():
        assert parse_move(format_move(move)) == move
