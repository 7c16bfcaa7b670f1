import { describe, expect, it } from 'vitest';

import { renderBoardSvg, stackCenter } from '../src/board';

const FIG1 = [1, 7, 5, 6, 2, 3, 6];

describe('renderBoardSvg', () => {
  it('renders one group per stack with its height label', () => {
    const svg = renderBoardSvg({
      heights: FIG1,
      k: 4,
      selectedWindow: null,
      pendingHeights: null,
    });
    for (let i = 0; i < 7; i++) {
      expect(svg).toContain(`data-stack="${i}"`);
    }
    expect(svg).toContain('>7</text>');
    expect(svg.match(/class="stack/g)?.length).toBe(7);
  });

  it('highlights exactly the selected window, wrapping the seam', () => {
    const svg = renderBoardSvg({
      heights: FIG1,
      k: 4,
      selectedWindow: 5, // stacks 5,6,0,1
      pendingHeights: [3, 6, 1, 7],
    });
    const selected = [...svg.matchAll(/class="stack selected" data-stack="(\d)"/g)]
      .map((m) => Number(m[1]))
      .sort();
    expect(selected).toEqual([0, 1, 5, 6]);
    expect(svg).toContain('window-arc');
  });

  it('marks pending reductions next to their stacks', () => {
    const svg = renderBoardSvg({
      heights: FIG1,
      k: 4,
      selectedWindow: 0,
      pendingHeights: [0, 1, 5, 4],
    });
    expect(svg).toContain('-&gt;0');
    expect(svg).toContain('-&gt;1');
    expect(svg).not.toContain('-&gt;5'); // unchanged stack gets no marker
  });

  it('spaces stacks evenly on the ring', () => {
    const a = stackCenter(7, 0);
    const b = stackCenter(7, 1);
    expect(a).not.toEqual(b);
    const radius = Math.hypot(a.x - 210, a.y - 210);
    expect(radius).toBeCloseTo(150, 5);
  });
});
