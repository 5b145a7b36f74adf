"""Text formats for states and moves.

Two state grammars are supported:

* generic: ``r:1,1,4|b:2,2`` lists every stack height per color section.
* angle: ``<3,5;4;2>`` gives red singletons, blue singletons, red hill
  heights and blue hill heights for a two-color state.  An empty hill
  list may be written as nothing or as a lone ``0`` (``<5,7;0;2>``).

Moves read ``r@1>b@1``: the class before ``>`` is placed on top of the
class after it.  Red is always the first color section.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BLUE, COLOR_LABELS, GameState, Move, RED, color_label


class CodecError(ValueError):
    """Parse or validation failure; carries the offending position."""

    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position} in {text!r})")


@dataclass(frozen=True)
class ShapeDescriptor:
    """Singleton counts plus hill height lists of a two-color state."""

    red_singletons: int
    blue_singletons: int
    red_hills: tuple[int, ...]
    blue_hills: tuple[int, ...]

    @staticmethod
    def from_state(state: GameState) -> "ShapeDescriptor":
        if any(c > BLUE for c in state.colors):
            raise ValueError("shape descriptors require a two-color state")
        red = state.heights(RED)
        blue = state.heights(BLUE)
        return ShapeDescriptor(
            red_singletons=sum(1 for h in red if h == 1),
            blue_singletons=sum(1 for h in blue if h == 1),
            red_hills=tuple(sorted((h for h in red if h >= 2), reverse=True)),
            blue_hills=tuple(sorted((h for h in blue if h >= 2), reverse=True)),
        )

    def to_state(self) -> GameState:
        stacks = [(RED, 1)] * self.red_singletons
        stacks += [(BLUE, 1)] * self.blue_singletons
        stacks += [(RED, h) for h in self.red_hills]
        stacks += [(BLUE, h) for h in self.blue_hills]
        return GameState(stacks)


_LABEL_TO_COLOR = {label: i for i, label in enumerate(COLOR_LABELS)}


def _parse_color(token: str, text: str, pos: int) -> int:
    token = token.strip()
    if token in _LABEL_TO_COLOR:
        return _LABEL_TO_COLOR[token]
    if token.startswith("c") and token[1:].isdigit():
        return int(token[1:])
    raise CodecError(text, pos, f"unknown color label {token!r}")


def _parse_hill_list(section: str, text: str, pos: int) -> list[int]:
    section = section.strip()
    if not section or section == "0":
        return []
    heights = []
    for token in section.split(","):
        token = token.strip()
        if not token.isdigit():
            raise CodecError(text, pos, f"bad hill height {token!r}")
        h = int(token)
        if h < 2:
            raise CodecError(text, pos, f"hill height must be >= 2, got {h}")
        heights.append(h)
    return heights


def parse_state(text: str) -> GameState:
    """Parse either grammar into a state."""
    stripped = text.strip()
    if stripped.startswith("<"):
        if not stripped.endswith(">"):
            raise CodecError(text, len(text) - 1, "missing closing '>'")
        body = stripped[1:-1]
        sections = body.split(";")
        if len(sections) != 3:
            raise CodecError(text, 0, "angle form needs 3 ';'-separated sections")
        counts = sections[0].split(",")
        if len(counts) != 2:
            raise CodecError(text, 1, "expected 'j,k' singleton counts")
        try:
            j, k = (int(c.strip()) for c in counts)
        except ValueError:
            raise CodecError(text, 1, "singleton counts must be integers") from None
        if j < 0 or k < 0:
            raise CodecError(text, 1, "singleton counts must be >= 0")
        red_hills = _parse_hill_list(sections[1], text, len(sections[0]) + 2)
        blue_hills = _parse_hill_list(
            sections[2], text, len(sections[0]) + len(sections[1]) + 3
        )
        shape = ShapeDescriptor(j, k, tuple(red_hills), tuple(blue_hills))
        state = shape.to_state()
        if state.stack_count == 0:
            raise CodecError(text, 0, "state has no stacks")
        return state

    stacks: list[tuple[int, int]] = []
    seen: set[int] = set()
    pos = 0
    for section in stripped.split("|"):
        if ":" not in section:
            raise CodecError(text, pos, "color section needs 'label:heights'")
        label, _, heights = section.partition(":")
        color = _parse_color(label, text, pos)
        if color in seen:
            raise CodecError(text, pos, f"duplicate color section {label!r}")
        seen.add(color)
        if not heights.strip():
            raise CodecError(text, pos, "color section lists no heights")
        for token in heights.split(","):
            token = token.strip()
            if not token.isdigit():
                raise CodecError(text, pos, f"bad stack height {token!r}")
            h = int(token)
            if h < 1:
                raise CodecError(text, pos, f"stack height must be >= 1, got {h}")
            stacks.append((color, h))
        pos += len(section) + 1
    if not stacks:
        raise CodecError(text, 0, "state has no stacks")
    return GameState(stacks)


def format_state(state: GameState, style: str = "generic") -> str:
    """Render a state; ``style`` is ``generic`` or ``paper`` (angle form)."""
    if style == "paper":
        if any(c > BLUE for c in state.colors):
            raise ValueError("angle form requires a two-color state")
        shape = ShapeDescriptor.from_state(state)
        red = ",".join(str(h) for h in shape.red_hills)
        blue = ",".join(str(h) for h in shape.blue_hills)
        return f"<{shape.red_singletons},{shape.blue_singletons};{red};{blue}>"
    if style != "generic":
        raise ValueError(f"unknown style {style!r}")
    sections = []
    for color in state.colors:
        heights = ",".join(str(h) for h in state.heights(color))
        sections.append(f"{color_label(color)}:{heights}")
    return "|".join(sections)


def parse_move(text: str) -> Move:
    """Parse ``color@height>color@height``."""
    stripped = text.strip()
    if ">" not in stripped:
        raise CodecError(text, 0, "move needs 'source>destination'")
    src_text, _, dst_text = stripped.partition(">")

    def parse_class(part: str, pos: int) -> tuple[int, int]:
        part = part.strip()
        if "@" not in part:
            raise CodecError(text, pos, "stack class needs 'color@height'")
        label, _, height = part.partition("@")
        color = _parse_color(label, text, pos)
        height = height.strip()
        if not height.isdigit() or int(height) < 1:
            raise CodecError(text, pos, f"bad height {height!r}")
        return (color, int(height))

    return Move(parse_class(src_text, 0), parse_class(dst_text, len(src_text) + 1))


def format_move(move: Move) -> str:
    (sc, sh), (dc, dh) = move.source, move.destination
    return f"{color_label(sc)}@{sh}>{color_label(dc)}@{dh}"
