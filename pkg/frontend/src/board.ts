// Circular board rendered as an SVG string: n stacks on a circle, heights
// as labeled columns, the selected k-window highlighted (wrapping across
// the seam when needed).  Pure string output keeps this testable without
// a DOM; main.ts injects it and wires events via data-stack attributes.

import { windowIndices } from './model';

export interface BoardView {
  heights: number[];
  k: number;
  selectedWindow: number | null;
  pendingHeights: number[] | null; // window order, when a window is selected
}

const SIZE = 420;
const CENTER = SIZE / 2;
const RING = 150;

export function stackCenter(n: number, i: number): { x: number; y: number } {
  // stack 0 at the top, clockwise
  const angle = (2 * Math.PI * i) / n - Math.PI / 2;
  return {
    x: CENTER + RING * Math.cos(angle),
    y: CENTER + RING * Math.sin(angle),
  };
}

function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

export function renderBoardSvg(view: BoardView): string {
  const n = view.heights.length;
  const selected =
    view.selectedWindow === null
      ? new Set<number>()
      : new Set(windowIndices(n, view.k, view.selectedWindow));
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${SIZE} ${SIZE}" xmlns="http://www.w3.org/2000/svg" role="img">`,
  );
  parts.push(
    `<circle cx="${CENTER}" cy="${CENTER}" r="${RING}" fill="none" stroke="#ccc" stroke-dasharray="4 6"/>`,
  );
  // window arc drawn behind the stacks, across the seam if necessary
  if (view.selectedWindow !== null) {
    const startAngle = (2 * Math.PI * view.selectedWindow) / n - Math.PI / 2;
    const endAngle = (2 * Math.PI * ((view.selectedWindow + view.k - 1) % n)) / n - Math.PI / 2;
    const large = view.k - 1 > n / 2 ? 1 : 0;
    const x1 = CENTER + RING * Math.cos(startAngle);
    const y1 = CENTER + RING * Math.sin(startAngle);
    const x2 = CENTER + RING * Math.cos(endAngle);
    const y2 = CENTER + RING * Math.sin(endAngle);
    parts.push(
      `<path class="window-arc" d="M ${x1.toFixed(1)} ${y1.toFixed(1)} ` +
        `A ${RING} ${RING} 0 ${large} 1 ${x2.toFixed(1)} ${y2.toFixed(1)}" ` +
        `fill="none" stroke="#2b6cb0" stroke-width="26" stroke-opacity="0.25" stroke-linecap="round"/>`,
    );
  }
  for (let i = 0; i < n; i++) {
    const { x, y } = stackCenter(n, i);
    const inSel = selected.has(i);
    let pendingLabel = '';
    if (inSel && view.pendingHeights && view.selectedWindow !== null) {
      const slot = windowIndices(n, view.k, view.selectedWindow).indexOf(i);
      const pendingValue = view.pendingHeights[slot];
      if (pendingValue !== view.heights[i]) {
        pendingLabel =
          `<text x="${x.toFixed(1)}" y="${(y + 34).toFixed(1)}" text-anchor="middle" ` +
          `class="pending-height" fill="#c53030" font-size="13">-&gt;${pendingValue}</text>`;
      }
    }
    parts.push(
      `<g class="stack${inSel ? ' selected' : ''}" data-stack="${i}">` +
        `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="24" ` +
        `fill="${inSel ? '#bee3f8' : '#edf2f7'}" stroke="${inSel ? '#2b6cb0' : '#a0aec0'}" stroke-width="2"/>` +
        `<text x="${x.toFixed(1)}" y="${(y + 6).toFixed(1)}" text-anchor="middle" font-size="18">` +
        `${esc(String(view.heights[i]))}</text>` +
        `<text x="${x.toFixed(1)}" y="${(y - 32).toFixed(1)}" text-anchor="middle" ` +
        `fill="#718096" font-size="11">${i}</text>` +
        pendingLabel +
        `</g>`,
    );
  }
  parts.push('</svg>');
  return parts.join('');
}
