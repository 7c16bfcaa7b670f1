// DTOs mirroring the circular-nim service JSON exactly.

export interface HistoryEntry {
  mover: 'human' | 'engine';
  window_start: number;
  new_heights: number[];
  heights_after: number[];
}

export interface GameState {
  id: string;
  n: number;
  k: number;
  heights: number[];
  to_move: 'human' | 'engine';
  status: 'ongoing' | 'finished';
  winner: 'human' | 'engine' | null;
  history: HistoryEntry[];
}

export interface CreateGameResponse {
  id: string;
  state: GameState;
}

export interface MoveOut {
  window_start: number;
  new_heights: number[];
}

export interface EngineReply {
  move: MoveOut;
  state: GameState;
}

export interface MoveResponse {
  state: GameState;
  engine_reply: EngineReply | null;
}

export interface AnalyzeResponse {
  outcome: string; // "P" | "N" | "unknown(oracle ceiling)"
  label?: string | null;
  winning_moves?: MoveOut[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: Record<string, unknown> | null;
}
