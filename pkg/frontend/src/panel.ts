// Analysis panel view-model: formats /analyze responses and manages
// sandboxed what-if edits (hypothetical heights never touch the game).

import type { AnalyzeResponse, MoveOut } from './types';

export interface PanelView {
  headline: string;
  note: string | null;
  winningMoves: MoveOut[];
}

export function panelView(res: AnalyzeResponse): PanelView {
  let headline: string;
  let note: string | null = null;
  if (res.outcome === 'P') {
    headline = res.label ? `P — ${res.label}` : 'P';
  } else if (res.outcome === 'N') {
    headline = 'N';
  } else {
    headline = res.label ? `? — ${res.label}` : '?';
    note = 'position too large for exact search; label only';
  }
  return { headline, note, winningMoves: (res.winning_moves ?? []).slice(0, 3) };
}

export interface WhatIf {
  baseline: number[];
  edited: number[];
}

export function startWhatIf(heights: number[]): WhatIf {
  return { baseline: heights.slice(), edited: heights.slice() };
}

/** What-if edits are free-form but never negative; they live outside the game. */
export function editWhatIf(w: WhatIf, stack: number, value: number): WhatIf {
  if (stack < 0 || stack >= w.edited.length) return w;
  const edited = w.edited.slice();
  edited[stack] = Math.max(0, Math.floor(value));
  return { baseline: w.baseline, edited };
}

export function resetWhatIf(w: WhatIf): WhatIf {
  return { baseline: w.baseline, edited: w.baseline.slice() };
}
