// DOM wiring: render the controller view into the page and forward events.

import { createHttpClient } from './api';
import { renderBoardSvg } from './board';
import { GameController, type ControllerView } from './controller';
import { windowIndices } from './model';
import { editWhatIf, resetWhatIf, startWhatIf, type WhatIf } from './panel';

const apiBase = new URLSearchParams(location.search).get('api') ?? '';
const controller = new GameController(createHttpClient(apiBase), render);
let whatIf: WhatIf | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function render(view: ControllerView): void {
  const board = el<HTMLDivElement>('board');
  board.innerHTML = renderBoardSvg({
    heights: view.shownHeights,
    k: view.state?.k ?? 0,
    selectedWindow: view.pending.windowStart,
    pendingHeights: view.pending.windowStart === null ? null : view.pending.newHeights,
  });
  board.querySelectorAll<SVGGElement>('g.stack').forEach((g) => {
    g.addEventListener('click', () => {
      controller.selectWindowAt(Number(g.dataset.stack));
    });
  });

  renderSteppers(view);
  renderStatus(view);
  renderPanel(view);
}

function renderSteppers(view: ControllerView): void {
  const host = el<HTMLDivElement>('steppers');
  host.innerHTML = '';
  const state = view.state;
  if (!state || view.pending.windowStart === null) {
    host.textContent = 'click a stack to select the window starting there';
    return;
  }
  const idx = windowIndices(state.n, state.k, view.pending.windowStart);
  idx.forEach((stack, slot) => {
    const row = document.createElement('div');
    row.className = 'stepper';
    const label = document.createElement('span');
    label.textContent = `stack ${stack} (${state.heights[stack]})`;
    const input = document.createElement('input');
    input.type = 'number';
    input.min = '0';
    input.max = String(state.heights[stack]);
    input.value = String(view.pending.newHeights[slot]);
    input.addEventListener('input', () => {
      controller.setHeight(slot, Number(input.value));
    });
    row.append(label, input);
    host.append(row);
  });
  const submit = document.createElement('button');
  submit.id = 'submit';
  submit.textContent = 'play move';
  submit.disabled = !view.submitEnabled;
  submit.addEventListener('click', () => void controller.submit());
  const clear = document.createElement('button');
  clear.textContent = 'clear';
  clear.addEventListener('click', () => controller.clearPending());
  host.append(submit, clear);
}

function renderStatus(view: ControllerView): void {
  const host = el<HTMLDivElement>('status');
  const state = view.state;
  if (!state) {
    host.textContent = 'no game yet';
    return;
  }
  if (state.status === 'finished') {
    host.textContent = `game over — ${state.winner} took the last token`;
  } else {
    host.textContent = `CN(${state.n},${state.k}) — ${state.to_move} to move`;
  }
  if (view.lastEngineReply) {
    const m = view.lastEngineReply.move;
    host.textContent += ` | engine played window ${m.window_start} -> [${m.new_heights.join(',')}]`;
  }
  const banner = el<HTMLDivElement>('error');
  banner.textContent = view.error ?? '';
  banner.style.display = view.error ? 'block' : 'none';
  el<HTMLButtonElement>('new-game').textContent = view.staleSession
    ? 'start a new game'
    : 'new game';
}

function renderPanel(view: ControllerView): void {
  const host = el<HTMLDivElement>('analysis');
  if (!view.analysis) {
    host.textContent = '';
    return;
  }
  const { headline, note, winningMoves } = view.analysis;
  const moves = winningMoves
    .map((m) => `window ${m.window_start} -> [${m.new_heights.join(',')}]`)
    .join('; ');
  host.innerHTML =
    `<strong>${headline}</strong>` +
    (note ? `<div class="note">${note}</div>` : '') +
    (moves ? `<div class="moves">winning: ${moves}</div>` : '');
}

function readSetup(): { n: number; k: number; heights?: number[] } {
  const n = Number(el<HTMLInputElement>('setup-n').value);
  const k = Number(el<HTMLInputElement>('setup-k').value);
  const raw = el<HTMLInputElement>('setup-heights').value.trim();
  if (!raw) return { n, k };
  return { n, k, heights: raw.split(',').map((h) => Number(h.trim())) };
}

function wireWhatIf(): void {
  el<HTMLButtonElement>('whatif-run').addEventListener('click', () => {
    const view = controller.view();
    if (!view.state) return;
    if (!whatIf) whatIf = startWhatIf(view.state.heights);
    const raw = el<HTMLInputElement>('whatif-heights').value.trim();
    if (raw) {
      raw.split(',').forEach((h, i) => {
        whatIf = editWhatIf(whatIf!, i, Number(h.trim()));
      });
    }
    void controller.refreshAnalysis(whatIf.edited);
  });
  el<HTMLButtonElement>('whatif-reset').addEventListener('click', () => {
    if (whatIf) whatIf = resetWhatIf(whatIf);
    el<HTMLInputElement>('whatif-heights').value = '';
    void controller.refreshAnalysis();
  });
}

document.addEventListener('DOMContentLoaded', () => {
  el<HTMLButtonElement>('new-game').addEventListener('click', () => {
    const { n, k, heights } = readSetup();
    void controller.newGame(n, k, heights).catch((err) => {
      el<HTMLDivElement>('error').textContent = String(err);
      el<HTMLDivElement>('error').style.display = 'block';
    });
  });
  wireWhatIf();
  render(controller.view());
});
