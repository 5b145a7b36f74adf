"""Command-line front end.

Subcommands: ``classify`` (winner from chip counts), ``solve`` (winner of
an arbitrary state), ``best`` (winning moves plus the scripted choice
where one applies), ``verify`` (the verification suites), ``play``
(human against the engine on the terminal), ``serve`` (HTTP session
service).  Exit status 0 on success, 1 when a verification suite fails,
2 on usage or validation errors, 3 when the solver bound is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codec import CodecError, format_move, format_state, parse_move, parse_state
from .core import BLUE, GameState, IllegalMoveError, Player, RED
from .solver import SolverBoundExceeded, is_safe, optimal_moves, solve
from .strategy import (
    GameConfig,
    StrategyDecision,
    StrategyError,
    alice_move,
    bob_move,
    classify_one_color,
    classify_reason,
    classify_winner,
    initial_bob_memory,
    lemma2_move,
)
from . import verify as harness

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


def _print_payload(payload: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_classify(args) -> int:
    if args.one_color is not None:
        winner = classify_one_color(args.one_color)
        reason = "even chip count" if args.one_color % 2 == 0 else "odd chip count"
        payload = {"one_color_n": args.one_color, "winner": str(winner), "reason": reason}
        _print_payload(payload, args.format, f"{winner} player wins ({reason})")
        return EXIT_OK
    if args.p is None or args.q is None:
        print("classify needs --p and --q (or --one-color)", file=sys.stderr)
        return EXIT_USAGE
    try:
        winner = classify_winner(args.p, args.q)
        reason = classify_reason(args.p, args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {"p": args.p, "q": args.q, "winner": str(winner), "reason": reason}
    _print_payload(payload, args.format, f"{winner} player wins ({reason})")
    return EXIT_OK


def _cmd_solve(args) -> int:
    state = parse_state(args.state)
    outcome = solve(state)
    safe = outcome.winner is Player.SECOND
    payload = {
        "state": format_state(state, "generic"),
        "winner": str(outcome.winner),
        "safe": safe,
    }
    word = "safe" if safe else "unsafe"
    _print_payload(payload, args.format, f"{word}: {outcome.winner} player wins")
    return EXIT_OK


def _scripted_hint(state: GameState):
    """Stateless scripted rule for the position, when one applies."""
    if any(c > BLUE for c in state.colors) or state.mover() is not Player.SECOND:
        return None
    m = state.total_chips // 2
    for color in (RED, BLUE):
        own = state.heights(color)
        if len(own) == 1 and own[0] > m and state.heights(1 - color):
            move = sorted(state.legal_moves())[0]
            return {"move": format_move(move), "rule_tag": "lemma1.any"}
    try:
        decision = lemma2_move(state)
        return {"move": format_move(decision.move), "rule_tag": decision.rule_tag}
    except StrategyError:
        return None


def _cmd_best(args) -> int:
    state = parse_state(args.state)
    if state.is_terminal():
        print("error: the position is finished", file=sys.stderr)
        return EXIT_USAGE
    wins = optimal_moves(state)
    hint = _scripted_hint(state)
    payload = {
        "state": format_state(state, "generic"),
        "mover": str(state.mover()),
        "winning_moves": [format_move(m) for m in wins],
        "scripted": hint,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        if wins:
            print(f"winning moves for the {state.mover()} player:")
            for m in wins:
                print(f"  {format_move(m)}")
        else:
            print(f"the {state.mover()} player is lost; every move loses")
        if hint:
            print(f"scripted choice: {hint['move']} [{hint['rule_tag']}]")
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = []
    if args.suite == "all":
        reports = harness.default_suites()
    elif args.suite == "theorem":
        reports = [harness.verify_theorem(args.max_n or harness.DEFAULT_THEOREM_MAX_N)]
    elif args.suite.startswith("lemma"):
        lemma_id = int(args.suite[-1])
        reports = [harness.verify_lemma(lemma_id, args.max_n or harness.DEFAULT_LEMMA_MAX_N)]
    elif args.suite == "bob":
        if args.p is None or args.q is None:
            print("verify --suite bob needs --p and --q", file=sys.stderr)
            return EXIT_USAGE
        reports = [
            harness.verify_bob_strategy(
                args.p, args.q, sample_lines=args.sample, seed=args.seed
            )
        ]
    elif args.suite == "alice":
        if args.p is None or args.q is None:
            print("verify --suite alice needs --p and --q", file=sys.stderr)
            return EXIT_USAGE
        reports = [harness.verify_alice_strategy(args.p, args.q)]
    else:
        print(f"unknown suite {args.suite!r}", file=sys.stderr)
        return EXIT_USAGE
    failed = 0
    for report in reports:
        sys.stdout.write(harness.emit_report(report, args.format))
        if args.format != "text":
            sys.stdout.write("\n")
        failed += report.failed
    return EXIT_SUITE_FAILED if failed else EXIT_OK


def _engine_decision(state, config, engine: Player, memory):
    """Engine move for ``play``; returns (decision, updated bob memory)."""
    if engine is Player.SECOND and config.even_total and config.minority >= 3:
        decision, memory = bob_move(state, memory)
        return decision, memory
    if engine is Player.FIRST and config.minority <= 2:
        return alice_move(state, config), memory
    wins = optimal_moves(state)
    if wins:
        return StrategyDecision(sorted(wins)[0], "fallback", True), memory
    return (
        StrategyDecision(sorted(state.legal_moves())[0], "losing-position", True),
        memory,
    )


def _cmd_play(args) -> int:
    try:
        config = GameConfig(args.p, args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.side == "auto":
        engine = classify_winner(args.p, args.q)
    else:
        engine = Player.FIRST if args.side == "first" else Player.SECOND
    state = config.initial_state()
    memory = initial_bob_memory(config)
    print(f"game: minority {args.p}, majority {args.q}; "
          f"predicted winner: {classify_winner(args.p, args.q)} player "
          f"({classify_reason(args.p, args.q)})")
    print(f"engine plays {engine}; enter moves like r@1>b@1, or 'moves', or 'quit'")
    last_human: object = None
    while not state.is_terminal():
        print(f"\nstate: {format_state(state, 'generic')}"
              + (f"   {format_state(state, 'paper')}" if state.color_count <= 2 else ""))
        mover = state.mover()
        if mover is engine:
            if engine is Player.SECOND and last_human is not None:
                memory = memory.observe(last_human)
            decision, memory = _engine_decision(state, config, engine, memory)
            state = state.apply_move(decision.move)
            flag = " (fallback)" if decision.fallback_used else ""
            print(f"engine: {format_move(decision.move)} [{decision.rule_tag}]{flag}")
            continue
        line = input(f"your move ({mover})> ").strip()
        if line in ("quit", "exit"):
            print("resigned")
            return EXIT_OK
        if line == "moves":
            for move in state.legal_moves():
                print(f"  {format_move(move)}")
            continue
        try:
            move = parse_move(line)
            state.check_move(move)
        except (CodecError, IllegalMoveError) as exc:
            print(f"rejected: {exc}")
            continue
        state = state.apply_move(move)
        last_human = move
    winner = state.mover().other
    print(f"\nfinal: {format_state(state, 'generic')}")
    print(f"game over: the {winner} player ({'engine' if winner is engine else 'you'}) wins")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(journal_path=args.journal, frontend_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="babylon", description="Babylon engine, solver, and verifier"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="winner from chip counts")
    p_classify.add_argument("--p", type=int, help="minority chip count")
    p_classify.add_argument("--q", type=int, help="majority chip count")
    p_classify.add_argument("--one-color", type=int, dest="one_color")
    p_classify.add_argument("--format", choices=("text", "json"), default="text")
    p_classify.set_defaults(func=_cmd_classify)

    p_solve = sub.add_parser("solve", help="winner of an arbitrary state")
    p_solve.add_argument("--state", required=True)
    p_solve.add_argument("--format", choices=("text", "json"), default="text")
    p_solve.set_defaults(func=_cmd_solve)

    p_best = sub.add_parser("best", help="winning moves for the mover")
    p_best.add_argument("--state", required=True)
    p_best.add_argument("--format", choices=("text", "json"), default="text")
    p_best.set_defaults(func=_cmd_best)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=("all", "theorem", "lemma1", "lemma2", "lemma3", "lemma4", "bob", "alice"),
    )
    p_verify.add_argument("--max-n", type=int, dest="max_n")
    p_verify.add_argument("--p", type=int)
    p_verify.add_argument("--q", type=int)
    p_verify.add_argument("--sample", type=int, help="sampled lines instead of exhaustive")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_play = sub.add_parser("play", help="play against the engine")
    p_play.add_argument("--p", type=int, required=True)
    p_play.add_argument("--q", type=int, required=True)
    p_play.add_argument(
        "--side",
        choices=("auto", "first", "second"),
        default="auto",
        help="engine side; auto picks the predicted winner",
    )
    p_play.set_defaults(func=_cmd_play)

    p_serve = sub.add_parser("serve", help="start the HTTP session service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--journal", default=None)
    p_serve.add_argument("--ui", default=None,
                         help="directory with the browser client to serve at /")
    p_serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SolverBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except CodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, IllegalMoveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
