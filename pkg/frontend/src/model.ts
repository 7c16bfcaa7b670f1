// Pending-move model: window selection plus per-stack replacement heights,
// kept legal by construction (clamped edits, submit gated on a decrease).
// The legality rules here mirror the server's structural checks so the UI
// never sends a request the server would reject for shape reasons.

export interface PendingMove {
  windowStart: number | null;
  // replacement heights for the k window stacks, in window order
  newHeights: number[];
}

export function windowIndices(n: number, k: number, start: number): number[] {
  const out: number[] = [];
  for (let j = 0; j < k; j++) out.push((start + j) % n);
  return out;
}

export function inWindow(n: number, k: number, start: number, stack: number): boolean {
  return windowIndices(n, k, start).includes(stack);
}

export function emptyPending(): PendingMove {
  return { windowStart: null, newHeights: [] };
}

export function selectWindow(heights: number[], k: number, start: number): PendingMove {
  const idx = windowIndices(heights.length, k, start);
  return { windowStart: start, newHeights: idx.map((i) => heights[i]) };
}

/** Clamp a stepper edit into [0, current height of that window slot]. */
export function setPendingHeight(
  pending: PendingMove,
  heights: number[],
  k: number,
  slot: number,
  value: number,
): PendingMove {
  if (pending.windowStart === null || slot < 0 || slot >= k) return pending;
  const idx = windowIndices(heights.length, k, pending.windowStart);
  const ceiling = heights[idx[slot]];
  const next = pending.newHeights.slice();
  next[slot] = Math.max(0, Math.min(ceiling, Math.floor(value)));
  return { windowStart: pending.windowStart, newHeights: next };
}

export type LegalityReason = 'no_window' | 'window' | 'shape' | 'floor' | 'no_decrease';

export interface Legality {
  ok: boolean;
  reason?: LegalityReason;
}

export function moveLegality(
  heights: number[],
  k: number,
  pending: PendingMove,
): Legality {
  const n = heights.length;
  if (pending.windowStart === null) return { ok: false, reason: 'no_window' };
  if (pending.windowStart < 0 || pending.windowStart >= n) {
    return { ok: false, reason: 'window' };
  }
  if (pending.newHeights.length !== k) return { ok: false, reason: 'shape' };
  const idx = windowIndices(n, k, pending.windowStart);
  let decreased = false;
  for (let j = 0; j < k; j++) {
    const cur = heights[idx[j]];
    const next = pending.newHeights[j];
    if (!Number.isInteger(next) || next < 0 || next > cur) {
      return { ok: false, reason: 'floor' };
    }
    if (next < cur) decreased = true;
  }
  if (!decreased) return { ok: false, reason: 'no_decrease' };
  return { ok: true };
}

export function canSubmit(heights: number[], k: number, pending: PendingMove): boolean {
  return moveLegality(heights, k, pending).ok;
}

/** Heights after the pending move, for optimistic rendering. */
export function previewHeights(
  heights: number[],
  k: number,
  pending: PendingMove,
): number[] {
  if (pending.windowStart === null) return heights.slice();
  const out = heights.slice();
  const idx = windowIndices(heights.length, k, pending.windowStart);
  for (let j = 0; j < k; j++) out[idx[j]] = pending.newHeights[j];
  return out;
}
