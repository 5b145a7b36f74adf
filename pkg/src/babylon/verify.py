"""Exhaustive desk-scale verification suites.

Each suite returns a :class:`VerificationReport` whose JSON and CSV
renderings are deterministic byte for byte apart from the recorded
duration.  Suites:

* ``verify_theorem``: the count-based winner classification against the
  solver on every opening position.
* ``verify_lemma``: direct enumeration of each endgame lemma's
  hypothesis states, all checked solver-safe; for lemma 3 the excluded
  family is also enumerated and recorded with its solver verdict.
* ``verify_bob_strategy``: a depth-first walk of every opponent line
  against the scripted second player, asserting the script moves last
  and lands on solver-safe states, with fallback accounting per rule tag.
* ``verify_alice_strategy``: the same for the scripted first player with
  one or two minority chips, including the power-of-two stack invariant.

Report schemas are documented in ``docs/reports.md``.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .codec import format_move, format_state
from .core import BLUE, GameState, Player, RED
from .solver import is_safe, solve
from .strategy import (
    GameConfig,
    WAVED_FALLBACK_TAGS,
    alice_move,
    bob_move,
    classify_one_color,
    classify_winner,
    initial_bob_memory,
    lemma_applies,
)

SCHEMA_VERSION = 1
MAX_FAILURE_EXEMPLARS = 25

# Desk-scale defaults; the full default run finishes in minutes.
DEFAULT_THEOREM_MAX_N = 16
DEFAULT_LEMMA_MAX_N = 14
DEFAULT_WALK_MAX_N = 14
DEFAULT_SAMPLED_WALK_N = 16
DEFAULT_SAMPLED_LINES = 200


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checked: int = 0
    passed: int = 0
    failed: int = 0
    fallbacks: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, failure: dict | None = None) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if failure is not None and len(self.failures) < MAX_FAILURE_EXEMPLARS:
                self.failures.append(failure)

    def count_fallback(self, tag: str) -> None:
        self.fallbacks[tag] = self.fallbacks.get(tag, 0) + 1

    def as_dict(self, include_duration: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "fallbacks": dict(sorted(self.fallbacks.items())),
            "notes": list(self.notes),
            "failures": list(self.failures),
            "rows": list(self.rows),
        }
        if include_duration:
            out["duration_seconds"] = self.duration_seconds
        return out


def emit_report(report: VerificationReport, fmt: str = "text") -> str:
    """Render a report as ``json``, ``csv``, or ``text``."""
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2)
    if fmt == "csv":
        rows = report.rows
        if not rows:
            return ""
        header = list(rows[0].keys())
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(str(row[h]) for h in header))
        return "\n".join(lines) + "\n"
    if fmt == "text":
        lines = [
            f"suite: {report.suite}",
            f"params: {json.dumps(report.params)}",
            f"checked: {report.checked}  passed: {report.passed}  failed: {report.failed}",
            f"result: {'PASS' if report.ok else 'FAIL'}",
        ]
        if report.fallbacks:
            lines.append("fallbacks: " + json.dumps(dict(sorted(report.fallbacks.items()))))
        for note in report.notes:
            lines.append(f"note: {note}")
        for failure in report.failures:
            lines.append(f"failure: {json.dumps(failure)}")
        lines.append(f"duration_seconds: {report.duration_seconds:.3f}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# theorem sweep


def verify_theorem(max_n: int = DEFAULT_THEOREM_MAX_N) -> VerificationReport:
    """Classification vs. solver on <p,q;;> for all p <= q, p+q <= max_n."""
    report = VerificationReport("theorem", {"max_n": max_n})
    start = time.perf_counter()
    for total in range(2, max_n + 1):
        for p in range(1, total // 2 + 1):
            q = total - p
            claimed = classify_winner(p, q)
            solved = solve(GameState.initial((p, q))).winner
            agree = claimed is solved
            report.rows.append(
                {
                    "p": p,
                    "q": q,
                    "n": total,
                    "claimed": str(claimed),
                    "solved": str(solved),
                    "agree": agree,
                }
            )
            report.record(
                agree,
                {"p": p, "q": q, "claimed": str(claimed), "solved": str(solved)},
            )
    for n in range(1, max_n + 1):
        claimed = classify_one_color(n)
        solved = solve(GameState.initial((n,))).winner
        report.record(
            claimed is solved,
            {"one_color_n": n, "claimed": str(claimed), "solved": str(solved)},
        )
    report.duration_seconds = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# lemma hypothesis enumerations


def _partitions(total: int, max_part: int | None = None):
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _single_stack_states(n: int):
    """Two-color states with exactly one red stack; yields (state, h)."""
    for h in range(1, n):
        for blues in _partitions(n - h):
            stacks = [(RED, h)] + [(BLUE, y) for y in blues]
            yield GameState(stacks), h, blues


def verify_lemma(lemma_id: int, max_n: int = DEFAULT_LEMMA_MAX_N) -> VerificationReport:
    """All states satisfying one lemma's hypothesis are solver-safe.

    For lemma 3 the excluded family (hill plus two equals half the chips
    and more than two majority singletons) is enumerated separately and
    each member's solver verdict is recorded as a row.
    """
    if lemma_id not in (1, 2, 3, 4):
        raise ValueError("lemma id must be 1..4")
    report = VerificationReport(f"lemma{lemma_id}", {"max_n": max_n})
    start = time.perf_counter()

    def check(state: GameState) -> None:
        if not lemma_applies(lemma_id, state):
            return
        safe = is_safe(state)
        report.record(
            safe,
            {"state": format_state(state, "paper"), "expected": "safe", "actual": "unsafe"},
        )

    for n in range(2, max_n + 1, 2):
        m = n // 2
        if lemma_id in (1, 2):
            for state, h, blues in _single_stack_states(n):
                check(state)
        elif lemma_id == 3:
            for u2 in range(2, n, 2):
                for v2 in range(2, n, 2):
                    rest = n - 2 - u2 - v2
                    if rest < 2 or rest % 2:
                        continue
                    state = GameState(
                        [(RED, 1)] * 2 + [(BLUE, 1)] * rest + [(RED, u2), (BLUE, v2)]
                    )
                    if u2 + 2 == m and rest > 2:
                        # excluded family: record the solver's verdict
                        verdict = "safe" if is_safe(state) else "unsafe"
                        report.rows.append(
                            {
                                "state": format_state(state, "paper"),
                                "n": n,
                                "family": "excluded",
                                "solver": verdict,
                            }
                        )
                        continue
                    check(state)
        else:
            for u2 in range(2, n, 2):
                for v2 in range(2, n, 2):
                    if u2 + v2 < 6:
                        continue
                    k = n - 3 - u2 - v2
                    if k < 3 or k % 2 == 0:
                        continue
                    state = GameState(
                        [(RED, 1)] * 3 + [(BLUE, 1)] * k + [(RED, u2), (BLUE, v2)]
                    )
                    check(state)
    report.duration_seconds = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# adversarial strategy walks


def verify_bob_strategy(
    p: int,
    q: int,
    sample_lines: int | None = None,
    seed: int = 0,
    check_safety: bool = True,
) -> VerificationReport:
    """Walk every opponent line against the scripted second player.

    Fails a line when the opponent moves last, a scripted move is
    illegal or lands on a solver-unsafe state, or a fallback move is
    used outside the documented positions.  With ``sample_lines`` the
    walk is a seeded random sample of lines instead of exhaustive.
    """
    config = GameConfig(p, q)
    if not config.even_total or p < 3:
        raise ValueError("the walk needs an even total and at least 3 minority chips")
    report = VerificationReport(
        "bob-strategy",
        {"p": p, "q": q, "sample_lines": sample_lines, "seed": seed},
    )
    start = time.perf_counter()
    allowed = WAVED_FALLBACK_TAGS

    def fail(state, memory, alice, message):
        report.record(
            False,
            {
                "state": format_state(state, "generic"),
                "phase": memory.phase,
                "alice": format_move(alice) if alice else None,
                "message": message,
            },
        )

    if sample_lines is None:
        seen: set = set()

        def walk(state: GameState, memory) -> None:
            key = (state, memory.phase, memory.role_color, memory.drive_tag)
            if key in seen:
                return
            seen.add(key)
            for alice in state.legal_moves():
                after = state.apply_move(alice)
                if after.is_terminal():
                    fail(state, memory, alice, "opponent made the last move")
                    continue
                try:
                    decision, nxt = bob_move(after, memory.observe(alice))
                except Exception as exc:  # scripting hole
                    fail(after, memory, alice, f"strategy error: {exc}")
                    continue
                if decision.fallback_used:
                    report.count_fallback(decision.rule_tag)
                    if decision.rule_tag not in allowed:
                        fail(after, memory, alice,
                             f"fallback tag {decision.rule_tag} not documented")
                result = after.apply_move(decision.move)
                if check_safety and not is_safe(result):
                    fail(after, memory, alice,
                         f"{decision.rule_tag} move {format_move(decision.move)} "
                         "lands on an unsafe state")
                    continue
                if result.is_terminal():
                    report.record(True)
                    continue
                walk(result, nxt)

        walk(config.initial_state(), initial_bob_memory(config))
    else:
        rng = random.Random(seed)
        for _ in range(sample_lines):
            state = config.initial_state()
            memory = initial_bob_memory(config)
            while True:
                alice = rng.choice(state.legal_moves())
                after = state.apply_move(alice)
                if after.is_terminal():
                    fail(state, memory, alice, "opponent made the last move")
                    break
                decision, memory = bob_move(after, memory.observe(alice))
                if decision.fallback_used:
                    report.count_fallback(decision.rule_tag)
                    if decision.rule_tag not in allowed:
                        fail(after, memory, alice,
                             f"fallback tag {decision.rule_tag} not documented")
                state = after.apply_move(decision.move)
                if check_safety and not is_safe(state):
                    fail(after, memory, alice,
                         f"{decision.rule_tag} lands on an unsafe state")
                    break
                if state.is_terminal():
                    report.record(True)
                    break
    report.duration_seconds = time.perf_counter() - start
    return report


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def verify_alice_strategy(p: int, q: int) -> VerificationReport:
    """Walk every reply line against the scripted first player."""
    config = GameConfig(p, q)
    if p > 2:
        raise ValueError("the first player's script covers one or two minority chips")
    report = VerificationReport("alice-strategy", {"p": p, "q": q})
    start = time.perf_counter()
    odd = not config.even_total
    seen: set = set()

    def walk(state: GameState) -> None:
        # first player to move
        if state in seen:
            return
        seen.add(state)
        decision = alice_move(state, config)
        if decision.fallback_used:
            report.count_fallback(decision.rule_tag)
            report.record(
                False,
                {"state": format_state(state, "generic"),
                 "message": f"script fell back via {decision.rule_tag}"},
            )
            return
        after = state.apply_move(decision.move)
        if odd:
            for h in after.heights(RED):
                if h > 2 and not _is_power_of_two(h):
                    report.record(
                        False,
                        {"state": format_state(after, "generic"),
                         "message": f"minority stack height {h} is not a power of two"},
                    )
                    return
        if after.is_terminal():
            report.record(True)
            return
        for reply in after.legal_moves():
            nxt = after.apply_move(reply)
            if nxt.is_terminal():
                report.record(
                    False,
                    {"state": format_state(after, "generic"),
                     "message": f"opponent reply {format_move(reply)} ended the game"},
                )
                continue
            walk(nxt)

    walk(config.initial_state())
    report.duration_seconds = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# bundled runs


def default_suites() -> list[VerificationReport]:
    """The standard verification battery at desk-scale bounds."""
    reports = [verify_theorem()]
    for lemma_id in (1, 2, 3, 4):
        reports.append(verify_lemma(lemma_id))
    for total in range(6, DEFAULT_WALK_MAX_N + 1, 2):
        for p in range(3, total // 2 + 1):
            reports.append(verify_bob_strategy(p, total - p))
    for total in (DEFAULT_SAMPLED_WALK_N,):
        for p in range(3, total // 2 + 1):
            reports.append(
                verify_bob_strategy(
                    p, total - p, sample_lines=DEFAULT_SAMPLED_LINES, seed=0
                )
            )
    for p in (1, 2):
        for q in range(p, 14 - p):
            if p + q <= 13:
                reports.append(verify_alice_strategy(p, q))
    return reports
