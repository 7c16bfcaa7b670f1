"""HTTP/JSON service exposing sessions, analysis and engine play."""

from __future__ import annotations

import random
import threading
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..core import (
    CN74,
    GameSpec,
    IllegalMove,
    InvalidPosition,
    Move,
    Position,
    apply_move,
    is_terminal,
    make_position,
)
from ..classifier import classify
from ..oracle import OutcomeClass, OutcomeTable, outcome, winning_options
from .engine import choose_engine_move, solve_space
from .schemas import (
    AnalyzeResponse,
    CreateGameBody,
    CreateGameResponse,
    EngineReply,
    GameState,
    HistoryEntry,
    MoveBody,
    MoveOut,
    MoveResponse,
)
from .sessions import GameSession, SessionStore


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, detail: Optional[dict] = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail


def _state_of(session: GameSession) -> GameState:
    return GameState(
        id=session.id,
        n=session.current.spec.n,
        k=session.current.spec.k,
        heights=list(session.current.heights),
        to_move=session.to_move,
        status="finished" if session.finished else "ongoing",
        winner=session.winner,
        history=[
            HistoryEntry(
                mover=mover,
                window_start=move.window_start,
                new_heights=list(move.new_heights),
                heights_after=list(result.heights),
            )
            for mover, move, result in session.history
        ],
    )


def create_app(
    oracle_ceiling: int = 2_000_000,
    random_height_bound: int = 5,
    max_winning_moves: int = 3,
    persist_dir: Optional[str] = None,
    rng: Optional[random.Random] = None,
) -> FastAPI:
    app = FastAPI(title="circular-nim", version="0.1.0")
    store = SessionStore(persist_dir)
    tables: dict[GameSpec, OutcomeTable] = {}
    oracle_lock = threading.Lock()
    randomness = rng if rng is not None else random.Random()

    def shared_table(spec: GameSpec) -> OutcomeTable:
        table = tables.get(spec)
        if table is None:
            table = OutcomeTable(spec, 0)
            tables[spec] = table
        return table

    def oracle_outcome(p: Position) -> OutcomeClass:
        with oracle_lock:
            return outcome(p, shared_table(p.spec))

    def oracle_moves(p: Position) -> list[Move]:
        with oracle_lock:
            return winning_options(p, shared_table(p.spec))

    @app.exception_handler(ApiError)
    async def api_error_handler(_: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "detail": exc.detail},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(_: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={
                "code": "invalid",
                "message": "request failed validation",
                "detail": {"errors": exc.errors()},
            },
        )

    def _random_position(spec: GameSpec) -> Position:
        # biased to N-positions so the engine can demonstrate winning play
        for _ in range(32):
            heights = tuple(
                randomness.randint(0, random_height_bound) for _ in range(spec.n)
            )
            if not any(heights):
                continue
            p = Position(spec, heights)
            if spec == CN74:
                if classify(p) is None:
                    return p
            elif solve_space(p) <= oracle_ceiling:
                if oracle_outcome(p) is OutcomeClass.N:
                    return p
            else:
                return p
        return p

    def _position_from(n: int, k: int, heights: Optional[list[int]]) -> Position:
        try:
            spec = GameSpec(n, k)
        except ValueError as exc:
            raise ApiError(400, "invalid_game", str(exc)) from exc
        if heights is None:
            return _random_position(spec)
        try:
            p = make_position(spec, heights)
        except InvalidPosition as exc:
            raise ApiError(400, "invalid_heights", str(exc)) from exc
        return p

    def _engine_turn(session: GameSession) -> Optional[EngineReply]:
        if session.finished or session.to_move != "engine":
            return None
        p = session.current
        move = choose_engine_move(p, oracle_ceiling, shared_table(p.spec))
        result = apply_move(p, move)
        session.record("engine", move, result)
        store.append_event(
            session,
            {
                "event": "move",
                "mover": "engine",
                "window_start": move.window_start,
                "new_heights": list(move.new_heights),
                "heights_after": list(result.heights),
            },
        )
        return EngineReply(
            move=MoveOut(window_start=move.window_start, new_heights=list(move.new_heights)),
            state=_state_of(session),
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/games", response_model=CreateGameResponse, status_code=201)
    def create_game(body: CreateGameBody):
        p = _position_from(body.n, body.k, body.heights)
        if is_terminal(p):
            raise ApiError(400, "invalid_heights", "cannot start at the terminal position")
        session = store.create(p, "engine" if body.engine_first else "human")
        with session.lock:
            _engine_turn(session)
        return CreateGameResponse(id=session.id, state=_state_of(session))

    @app.get("/games/{sid}", response_model=GameState)
    def get_game(sid: str):
        session = store.get(sid)
        if session is None:
            raise ApiError(404, "unknown_game", f"no session {sid!r}")
        return _state_of(session)

    @app.post("/games/{sid}/moves", response_model=MoveResponse)
    def post_move(sid: str, body: MoveBody):
        session = store.get(sid)
        if session is None:
            raise ApiError(404, "unknown_game", f"no session {sid!r}")
        with session.lock:
            if session.finished:
                raise ApiError(409, "finished", "the game is over")
            if session.to_move != "human":
                raise ApiError(409, "not_your_turn", "it is the engine's turn")
            if body.ply is not None and body.ply != len(session.history):
                raise ApiError(
                    409,
                    "conflict",
                    "the game advanced since this move was prepared",
                    {"expected_ply": len(session.history)},
                )
            move = Move(body.window_start, tuple(body.new_heights))
            try:
                result = apply_move(session.current, move)
            except IllegalMove as exc:
                raise ApiError(
                    422, "illegal_move", str(exc), {"reason": exc.reason}
                ) from exc
            session.record("human", move, result)
            store.append_event(
                session,
                {
                    "event": "move",
                    "mover": "human",
                    "window_start": move.window_start,
                    "new_heights": list(move.new_heights),
                    "heights_after": list(result.heights),
                },
            )
            human_state = _state_of(session)
            reply = _engine_turn(session)
        return MoveResponse(state=human_state, engine_reply=reply)

    @app.get("/analyze", response_model=AnalyzeResponse, response_model_exclude_none=True)
    def analyze(n: int, k: int, heights: str):
        try:
            parsed = [int(h) for h in heights.split(",")]
        except ValueError as exc:
            raise ApiError(400, "invalid_heights", "heights must be integers") from exc
        p = _position_from(n, k, parsed)
        label = classify(p) if p.spec == CN74 else None
        if solve_space(p) <= oracle_ceiling:
            oc = oracle_outcome(p)
            moves = oracle_moves(p)[:max_winning_moves] if oc is OutcomeClass.N else []
            return AnalyzeResponse(
                outcome=oc.value,
                label=label.value if label else None,
                winning_moves=[
                    MoveOut(window_start=m.window_start, new_heights=list(m.new_heights))
                    for m in moves
                ],
            )
        if p.spec != CN74:
            raise ApiError(
                413,
                "oracle_ceiling",
                "position exceeds the oracle ceiling and no closed form applies",
                {"solve_space": solve_space(p), "ceiling": oracle_ceiling},
            )
        winning: list[MoveOut] = []
        if label is None and not is_terminal(p):
            from ..strategist import find_winning_move

            m = find_winning_move(p)
            winning.append(
                MoveOut(window_start=m.window_start, new_heights=list(m.new_heights))
            )
        return AnalyzeResponse(
            outcome="unknown(oracle ceiling)",
            label=label.value if label else None,
            winning_moves=winning,
        )

    return app
