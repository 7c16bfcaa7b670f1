"""In-memory game sessions with per-session locking.

Mutation of one session is serialized by its lock (single writer); the
store itself only guards its dict.  Optionally every event is appended
to a JSON-lines file per session, purely as a convenience trail.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..core import Move, Position, is_terminal


@dataclass
class GameSession:
    id: str
    initial: Position
    current: Position
    to_move: str  # "human" | "engine"
    history: list[tuple[str, Move, Position]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def finished(self) -> bool:
        return is_terminal(self.current)

    @property
    def winner(self) -> Optional[str]:
        if not self.finished:
            return None
        return self.history[-1][0] if self.history else None

    def record(self, mover: str, move: Move, result: Position) -> None:
        self.history.append((mover, move, result))
        self.current = result
        self.to_move = "engine" if mover == "human" else "human"


class SessionStore:
    def __init__(self, persist_dir: Optional[str] = None):
        self._sessions: dict[str, GameSession] = {}
        self._guard = threading.Lock()
        self._persist_dir = Path(persist_dir) if persist_dir else None
        if self._persist_dir:
            self._persist_dir.mkdir(parents=True, exist_ok=True)

    def create(self, initial: Position, to_move: str) -> GameSession:
        sid = uuid.uuid4().hex[:12]
        session = GameSession(sid, initial, initial, to_move)
        with self._guard:
            self._sessions[sid] = session
        self.append_event(
            session,
            {
                "event": "created",
                "n": initial.spec.n,
                "k": initial.spec.k,
                "heights": list(initial.heights),
                "to_move": to_move,
            },
        )
        return session

    def get(self, sid: str) -> Optional[GameSession]:
        with self._guard:
            return self._sessions.get(sid)

    def append_event(self, session: GameSession, event: dict) -> None:
        if not self._persist_dir:
            return
        path = self._persist_dir / f"{session.id}.jsonl"
        with open(path, "a") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")
