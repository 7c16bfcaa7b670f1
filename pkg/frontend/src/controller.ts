// Game flow state machine, UI-framework free.  Holds the session state,
// the pending move, and analysis results; main.ts only renders whatever
// this exposes.  At most one move request is in flight; analysis requests
// cancel-on-supersede via a sequence counter.

import { ApiError, type ApiClient } from './api';
import {
  canSubmit,
  emptyPending,
  previewHeights,
  selectWindow,
  setPendingHeight,
  type PendingMove,
} from './model';
import { panelView, type PanelView } from './panel';
import type { EngineReply, GameState } from './types';

export interface ControllerView {
  state: GameState | null;
  shownHeights: number[]; // optimistic during submit, otherwise current
  pending: PendingMove;
  submitEnabled: boolean;
  inFlight: boolean;
  error: string | null;
  staleSession: boolean;
  lastEngineReply: EngineReply | null;
  analysis: PanelView | null;
}

export class GameController {
  private state: GameState | null = null;
  private pending: PendingMove = emptyPending();
  private optimistic: number[] | null = null;
  private inFlight = false;
  private error: string | null = null;
  private staleSession = false;
  private lastEngineReply: EngineReply | null = null;
  private analysis: PanelView | null = null;
  private analysisSeq = 0;

  constructor(
    private client: ApiClient,
    private onChange: (view: ControllerView) => void = () => {},
  ) {}

  view(): ControllerView {
    const heights = this.optimistic ?? this.state?.heights ?? [];
    return {
      state: this.state,
      shownHeights: heights,
      pending: this.pending,
      submitEnabled:
        this.state !== null &&
        !this.inFlight &&
        this.state.status === 'ongoing' &&
        this.state.to_move === 'human' &&
        canSubmit(this.state.heights, this.state.k, this.pending),
      inFlight: this.inFlight,
      error: this.error,
      staleSession: this.staleSession,
      lastEngineReply: this.lastEngineReply,
      analysis: this.analysis,
    };
  }

  private emit(): void {
    this.onChange(this.view());
  }

  async newGame(n: number, k: number, heights?: number[]): Promise<void> {
    const res = await this.client.createGame(n, k, heights);
    this.state = res.state;
    this.pending = emptyPending();
    this.optimistic = null;
    this.error = null;
    this.staleSession = false;
    this.lastEngineReply = null;
    this.analysis = null;
    this.emit();
    await this.refreshAnalysis();
  }

  /** Clicking a stack selects the k-window starting there. */
  selectWindowAt(start: number): void {
    if (!this.state || this.inFlight) return;
    this.pending = selectWindow(this.state.heights, this.state.k, start);
    this.error = null;
    this.emit();
  }

  /** Stepper edit for a window slot; clamped to [0, current]. */
  setHeight(slot: number, value: number): void {
    if (!this.state) return;
    this.pending = setPendingHeight(
      this.pending,
      this.state.heights,
      this.state.k,
      slot,
      value,
    );
    this.emit();
  }

  clearPending(): void {
    this.pending = emptyPending();
    this.emit();
  }

  async submit(): Promise<void> {
    if (!this.state || this.pending.windowStart === null) return;
    if (!this.view().submitEnabled) return;
    const { windowStart, newHeights } = this.pending;
    const ply = this.state.history.length;
    // optimistic render, reconciled with the server reply below
    this.optimistic = previewHeights(this.state.heights, this.state.k, this.pending);
    this.inFlight = true;
    this.error = null;
    this.emit();
    try {
      const res = await this.client.postMove(this.state.id, windowStart, newHeights, ply);
      this.state = res.engine_reply ? res.engine_reply.state : res.state;
      this.lastEngineReply = res.engine_reply;
      this.pending = emptyPending();
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        this.staleSession = true;
        this.error = 'session is gone; start a new game';
      } else if (err instanceof ApiError) {
        const reason = err.body.detail?.reason;
        this.error = reason ? `${err.body.message} (${String(reason)})` : err.body.message;
      } else {
        this.error = String(err);
      }
    } finally {
      this.optimistic = null;
      this.inFlight = false;
      this.emit();
    }
    await this.refreshAnalysis();
  }

  /** Analyze arbitrary heights (what-if) or the live position by default. */
  async refreshAnalysis(heights?: number[]): Promise<void> {
    if (!this.state) return;
    const target = heights ?? this.state.heights;
    const seq = ++this.analysisSeq;
    try {
      const res = await this.client.analyze(this.state.n, this.state.k, target);
      if (seq !== this.analysisSeq) return; // superseded
      this.analysis = panelView(res);
    } catch (err) {
      if (seq !== this.analysisSeq) return;
      if (err instanceof ApiError && err.status === 413) {
        this.analysis = {
          headline: '?',
          note: 'position too large for exact search',
          winningMoves: [],
        };
      } else {
        this.analysis = null;
      }
    }
    this.emit();
  }
}
