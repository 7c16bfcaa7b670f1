"""Request/response models for the HTTP service.

Heights are always serialized as arrays of integers in position order;
errors use the shape {code, message, detail}.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class MoveBody(BaseModel):
    window_start: int
    new_heights: list[int]
    ply: Optional[int] = Field(
        default=None,
        description="Optimistic lock: history length the move was computed for",
    )


class MoveOut(BaseModel):
    window_start: int
    new_heights: list[int]


class HistoryEntry(BaseModel):
    mover: str
    window_start: int
    new_heights: list[int]
    heights_after: list[int]


class GameState(BaseModel):
    id: str
    n: int
    k: int
    heights: list[int]
    to_move: str
    status: str
    winner: Optional[str] = None
    history: list[HistoryEntry]


class CreateGameBody(BaseModel):
    n: int
    k: int
    heights: Optional[list[int]] = None
    engine_first: bool = False


class CreateGameResponse(BaseModel):
    id: str
    state: GameState


class EngineReply(BaseModel):
    move: MoveOut
    state: GameState


class MoveResponse(BaseModel):
    state: GameState
    engine_reply: Optional[EngineReply] = None


class AnalyzeResponse(BaseModel):
    outcome: str
    label: Optional[str] = None
    winning_moves: Optional[list[MoveOut]] = None


class ErrorBody(BaseModel):
    code: str
    message: str
    detail: Optional[dict] = None
