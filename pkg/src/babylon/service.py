"""HTTP+JSON session service for human-vs-engine play.

Endpoints (all payloads JSON):

* ``POST /games`` body ``{"p": 3, "q": 9, "human_side": "first"}`` or
  ``{"colors": [3,3,3,3], "human_side": "first"}`` creates a session.
* ``GET /games/{id}`` returns the session view.
* ``GET /games/{id}/moves`` lists legal moves in move grammar.
* ``POST /games/{id}/moves`` body ``{"move": "r@1>b@1"}`` plays the
  human's move.
* ``POST /games/{id}/engine-move`` asks the engine to reply; the engine
  never moves unprompted.
* ``GET /games/{id}/audit`` replays the history from the start and
  reports whether it reproduces the current state.

Errors are ``{"code": ..., "message": ..., "clause": ...?}`` with
status 400/404/409.  Sessions live in memory; with a journal path every
event is also appended as one JSON line, and sessions are rebuilt from
the journal on startup.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .codec import (
    CodecError,
    ShapeDescriptor,
    format_move,
    format_state,
    parse_move,
)
from .core import GameState, IllegalMoveError, Move, Player
from .solver import check_bound, optimal_moves
from .strategy import (
    BobMemory,
    GameConfig,
    StrategyDecision,
    alice_move,
    bob_move,
    classify_winner,
    initial_bob_memory,
)


class ServiceError(Exception):
    def __init__(self, status: int, code: str, message: str, clause: str | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.clause = clause
        super().__init__(message)

    def payload(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.clause:
            out["clause"] = self.clause
        return out


@dataclass
class GameSession:
    id: str
    color_counts: tuple[int, ...]
    human: Player
    state: GameState
    config: GameConfig | None = None  # two-color sessions only
    memory: BobMemory | None = None
    history: list = field(default_factory=list)
    seq: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def engine(self) -> Player:
        return self.human.other

    @property
    def finished(self) -> bool:
        return self.state.is_terminal()

    @property
    def winner(self) -> Player | None:
        return self.state.mover().other if self.finished else None

    def view(self) -> dict:
        two_color = len(self.color_counts) <= 2
        out = {
            "id": self.id,
            "colors": list(self.color_counts),
            "human_side": str(self.human),
            "engine_side": str(self.engine),
            "state": format_state(self.state, "generic"),
            "stacks": [
                {"color": c, "height": h, "count": m}
                for (c, h), m in self.state.classes
            ],
            "to_move": str(self.state.mover()),
            "status": "finished" if self.finished else "in-progress",
            "winner": str(self.winner) if self.winner else None,
            "history": list(self.history),
        }
        if two_color:
            out["state_angle"] = format_state(self.state, "paper")
            shape = ShapeDescriptor.from_state(self.state)
            out["shape"] = {
                "red_singletons": shape.red_singletons,
                "blue_singletons": shape.blue_singletons,
                "red_hills": list(shape.red_hills),
                "blue_hills": list(shape.blue_hills),
            }
            p, q = sorted((self.color_counts[0], self.color_counts[1]))
            out["predicted_winner"] = str(classify_winner(p, q))
        return out


class SessionStore:
    def __init__(self, journal_path: str | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self._journal_path = journal_path
        self._journal_lock = threading.Lock()
        if journal_path and os.path.exists(journal_path):
            self._replay_journal(journal_path)

    # -- journal ------------------------------------------------------------

    def _append_journal(self, record: dict) -> None:
        if not self._journal_path:
            return
        with self._journal_lock:
            with open(self._journal_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")

    def _replay_journal(self, path: str) -> None:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                record = json.loads(line)
                if record["actor"] == "system":
                    config = record["config"]
                    self._create(
                        tuple(config["colors"]),
                        Player(config["human_side"]),
                        session_id=record["session"],
                        journal=False,
                    )
                elif record["actor"] == "engine":
                    # re-drive the scripted transducer so its memory is
                    # live again; the strategy is deterministic, so the
                    # recomputed move must match the journal
                    session = self._sessions[record["session"]]
                    decision = self._pick_engine_move(session)
                    if format_move(decision.move) != record["move"]:
                        raise ValueError(
                            f"journal out of step at seq {record['seq']} "
                            f"of session {record['session']}"
                        )
                    self._advance(session, decision.move, "engine",
                                  record.get("rule_tag"), journal=False)
                else:
                    session = self._sessions[record["session"]]
                    move = parse_move(record["move"])
                    self._advance(session, move, "human", None, journal=False)

    # -- session operations ---------------------------------------------------

    def _create(
        self,
        color_counts: tuple[int, ...],
        human: Player,
        session_id: str | None = None,
        journal: bool = True,
    ) -> GameSession:
        if len(color_counts) < 1 or any(c < 1 for c in color_counts):
            raise ServiceError(400, "invalid-config", "every color needs at least one chip")
        state = GameState.initial(color_counts)
        try:
            check_bound(state)
        except Exception as exc:
            raise ServiceError(400, "too-large", str(exc)) from None
        config = None
        memory = None
        if len(color_counts) == 2:
            p, q = color_counts
            if p > q:
                raise ServiceError(
                    400, "invalid-config", "two-color games list the minority count first"
                )
            config = GameConfig(p, q)
            memory = initial_bob_memory(config)
        session = GameSession(
            id=session_id or uuid.uuid4().hex[:12],
            color_counts=tuple(color_counts),
            human=human,
            state=state,
            config=config,
            memory=memory,
        )
        with self._lock:
            self._sessions[session.id] = session
        if journal:
            self._append_journal(
                {
                    "session": session.id,
                    "seq": 0,
                    "actor": "system",
                    "move": None,
                    "rule_tag": None,
                    "config": {
                        "colors": list(color_counts),
                        "human_side": str(human),
                    },
                }
            )
        return session

    def create(self, body: dict) -> GameSession:
        human_side = body.get("human_side", "first")
        if human_side not in ("first", "second"):
            raise ServiceError(400, "invalid-config", "human_side must be first or second")
        if "colors" in body:
            counts = body["colors"]
            if not isinstance(counts, list) or not all(
                isinstance(c, int) for c in counts
            ):
                raise ServiceError(400, "invalid-config", "colors must be a list of ints")
            return self._create(tuple(counts), Player(human_side))
        p, q = body.get("p"), body.get("q")
        if not isinstance(p, int) or not isinstance(q, int):
            raise ServiceError(400, "invalid-config", "need integer p and q, or colors")
        if p < 1 or q < 1 or p > q:
            raise ServiceError(400, "invalid-config", "need 1 <= p <= q")
        return self._create((p, q), Player(human_side))

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ServiceError(404, "unknown-session", f"no session {session_id!r}")
        return session

    def _advance(
        self,
        session: GameSession,
        move: Move,
        actor: str,
        rule_tag: str | None,
        journal: bool = True,
    ) -> None:
        session.state = session.state.apply_move(move)
        session.seq += 1
        entry = {
            "seq": session.seq,
            "actor": actor,
            "move": format_move(move),
            "rule_tag": rule_tag,
        }
        session.history.append(entry)
        if journal:
            self._append_journal({"session": session.id, **entry})
        # keep the scripted second player's transducer in step
        if session.memory is not None and actor == "human" and session.engine is Player.SECOND:
            session.memory = session.memory.observe(move)

    def submit_human_move(self, session: GameSession, move_text: str) -> None:
        try:
            move = parse_move(move_text)
        except CodecError as exc:
            raise ServiceError(400, "bad-move", str(exc)) from None
        if session.finished:
            raise ServiceError(409, "finished", "the game is over")
        if session.state.mover() is not session.human:
            raise ServiceError(409, "not-your-turn", "the engine is to move")
        try:
            session.state.check_move(move)
        except IllegalMoveError as exc:
            raise ServiceError(400, "illegal-move", str(exc), clause=exc.clause) from None
        self._advance(session, move, "human", None)

    def engine_move(self, session: GameSession) -> StrategyDecision:
        if session.finished:
            raise ServiceError(409, "finished", "the game is over")
        if session.state.mover() is not session.engine:
            raise ServiceError(409, "not-engine-turn", "waiting for the human move")
        decision = self._pick_engine_move(session)
        self._advance(session, decision.move, "engine", decision.rule_tag)
        return decision

    def _pick_engine_move(self, session: GameSession) -> StrategyDecision:
        state = session.state
        config = session.config
        if config is not None and session.engine is Player.SECOND and config.even_total:
            decision, session.memory = bob_move(state, session.memory)
            return decision
        if config is not None and session.engine is Player.FIRST and config.minority <= 2:
            return alice_move(state, config)
        wins = optimal_moves(state)
        if wins:
            return StrategyDecision(sorted(wins)[0], "fallback", True)
        return StrategyDecision(
            sorted(state.legal_moves())[0], "losing-position", True
        )

    def audit(self, session: GameSession) -> dict:
        state = GameState.initial(session.color_counts)
        for entry in session.history:
            state = state.apply_move(parse_move(entry["move"]))
        consistent = state == session.state
        return {
            "id": session.id,
            "events": len(session.history),
            "replayed_state": format_state(state, "generic"),
            "current_state": format_state(session.state, "generic"),
            "consistent": consistent,
        }


def create_app(journal_path: str | None = None, frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="babylon", version="0.1.0")
    store = SessionStore(journal_path)
    app.state.store = store

    @app.exception_handler(ServiceError)
    async def _service_error(_request: Request, exc: ServiceError):
        return JSONResponse(status_code=exc.status, content=exc.payload())

    @app.post("/games")
    async def create_game(request: Request):
        body = await request.json()
        session = store.create(body)
        return session.view()

    @app.get("/games/{session_id}")
    async def get_game(session_id: str):
        return store.get(session_id).view()

    @app.get("/games/{session_id}/moves")
    async def get_moves(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return {
                "id": session.id,
                "to_move": str(session.state.mover()),
                "moves": [format_move(m) for m in session.state.legal_moves()],
            }

    @app.post("/games/{session_id}/moves")
    async def post_move(session_id: str, request: Request):
        session = store.get(session_id)
        body = await request.json()
        move_text = body.get("move")
        if not isinstance(move_text, str):
            raise ServiceError(400, "bad-move", "body needs a 'move' string")
        with session.lock:
            store.submit_human_move(session, move_text)
            return session.view()

    @app.post("/games/{session_id}/engine-move")
    async def post_engine_move(session_id: str):
        session = store.get(session_id)
        with session.lock:
            decision = store.engine_move(session)
            view = session.view()
        view["engine_reply"] = {
            "move": format_move(decision.move),
            "rule_tag": decision.rule_tag,
            "fallback_used": decision.fallback_used,
        }
        return view

    @app.get("/games/{session_id}/audit")
    async def get_audit(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return store.audit(session)

    if frontend_dir and os.path.isdir(frontend_dir):
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="ui")
    return app
