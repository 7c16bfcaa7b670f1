// Smoke flow against a stub transport whose payloads are frozen from the
// real service: create the worked-example game, play its move, see the
// engine reply and the post-reply analysis ("P" with its family label).

import { describe, expect, it } from 'vitest';

import { ApiError, type ApiClient } from '../src/api';
import { GameController } from '../src/controller';
import type {
  AnalyzeResponse,
  CreateGameResponse,
  GameState,
  MoveResponse,
} from '../src/types';

const FIG1 = [1, 7, 5, 6, 2, 3, 6];

const created: CreateGameResponse = {
  id: '5d2cc3a01773',
  state: {
    id: '5d2cc3a01773', n: 7, k: 4,
    heights: [1, 7, 5, 6, 2, 3, 6],
    to_move: 'human', status: 'ongoing', winner: null, history: [],
  },
};

const moved: MoveResponse = {
  state: {
    id: '5d2cc3a01773', n: 7, k: 4,
    heights: [0, 1, 5, 4, 2, 3, 6],
    to_move: 'engine', status: 'ongoing', winner: null,
    history: [
      { mover: 'human', window_start: 0, new_heights: [0, 1, 5, 4],
        heights_after: [0, 1, 5, 4, 2, 3, 6] },
    ],
  },
  engine_reply: {
    move: { window_start: 5, new_heights: [0, 6, 0, 1] },
    state: {
      id: '5d2cc3a01773', n: 7, k: 4,
      heights: [0, 1, 5, 4, 2, 0, 6],
      to_move: 'human', status: 'ongoing', winner: null,
      history: [
        { mover: 'human', window_start: 0, new_heights: [0, 1, 5, 4],
          heights_after: [0, 1, 5, 4, 2, 3, 6] },
        { mover: 'engine', window_start: 5, new_heights: [0, 6, 0, 1],
          heights_after: [0, 1, 5, 4, 2, 0, 6] },
      ],
    },
  },
};

const analyses: Record<string, AnalyzeResponse> = {
  '1,7,5,6,2,3,6': { outcome: 'N', winning_moves: [
    { window_start: 2, new_heights: [1, 6, 2, 2] },
  ] },
  '0,1,5,4,2,0,6': { outcome: 'P', label: 'S4', winning_moves: [] },
};

function stubClient(log: string[]): ApiClient {
  return {
    async createGame(n, k, heights) {
      log.push(`create ${n},${k} ${heights?.join(',') ?? 'random'}`);
      return created;
    },
    async getGame(): Promise<GameState> {
      return created.state;
    },
    async postMove(id, windowStart, newHeights, ply) {
      log.push(`move ${id} w${windowStart} [${newHeights.join(',')}] ply${ply}`);
      if (windowStart !== 0 || ply !== 0) {
        throw new ApiError(409, { code: 'conflict', message: 'stale' });
      }
      return moved;
    },
    async analyze(_n, _k, heights) {
      log.push(`analyze ${heights.join(',')}`);
      const res = analyses[heights.join(',')];
      if (!res) throw new ApiError(400, { code: 'invalid', message: 'no fixture' });
      return res;
    },
  };
}

describe('game flow smoke', () => {
  it('plays the worked-example move and shows the engine reply analyzed as P', async () => {
    const log: string[] = [];
    const controller = new GameController(stubClient(log));

    await controller.newGame(7, 4, FIG1);
    expect(controller.view().state?.heights).toEqual(FIG1);
    expect(controller.view().analysis?.headline).toBe('N');

    controller.selectWindowAt(0);
    controller.setHeight(0, 0); // 1 -> 0
    controller.setHeight(1, 1); // 7 -> 1
    controller.setHeight(3, 4); // 6 -> 4
    expect(controller.view().submitEnabled).toBe(true);

    await controller.submit();
    const view = controller.view();
    expect(view.error).toBeNull();
    expect(view.lastEngineReply?.move).toEqual({
      window_start: 5,
      new_heights: [0, 6, 0, 1],
    });
    expect(view.state?.heights).toEqual([0, 1, 5, 4, 2, 0, 6]);
    expect(view.state?.to_move).toBe('human');
    // analysis panel reflects the post-reply position: P with its label
    expect(view.analysis?.headline).toBe('P — S4');
    expect(log).toContain('move 5d2cc3a01773 w0 [0,1,5,4] ply0');
  });

  it('blocks illegal edits client-side without calling the server', async () => {
    const log: string[] = [];
    const controller = new GameController(stubClient(log));
    await controller.newGame(7, 4, FIG1);

    controller.selectWindowAt(0);
    // stepper edits are clamped, so an "increase" cannot even be staged
    controller.setHeight(0, 50);
    expect(controller.view().pending.newHeights[0]).toBe(1);
    // nothing removed: submit stays disabled and submit() is a no-op
    expect(controller.view().submitEnabled).toBe(false);
    const calls = log.length;
    await controller.submit();
    expect(log.length).toBe(calls);
    expect(controller.view().state?.heights).toEqual(FIG1);
  });

  it('optimistically renders the pending move during submit', async () => {
    const log: string[] = [];
    const frames: number[][] = [];
    const controller = new GameController(stubClient(log), (v) => {
      frames.push(v.shownHeights.slice());
    });
    await controller.newGame(7, 4, FIG1);
    controller.selectWindowAt(0);
    controller.setHeight(0, 0);
    controller.setHeight(1, 1);
    controller.setHeight(3, 4);
    await controller.submit();
    // some frame between submit and reconcile shows the optimistic heights
    expect(frames).toContainEqual([0, 1, 5, 4, 2, 3, 6]);
    // final frame is the server's post-engine state
    expect(frames[frames.length - 1]).toEqual([0, 1, 5, 4, 2, 0, 6]);
  });

  it('surfaces a conflict message from a stale move', async () => {
    const log: string[] = [];
    const controller = new GameController(stubClient(log));
    await controller.newGame(7, 4, FIG1);
    controller.selectWindowAt(2);
    controller.setHeight(0, 1); // 5 -> 1, legal locally
    await controller.submit();
    expect(controller.view().error).toContain('stale');
  });

  it('marks the session stale on 404', async () => {
    const log: string[] = [];
    const client = stubClient(log);
    client.postMove = async () => {
      throw new ApiError(404, { code: 'unknown_game', message: 'gone' });
    };
    const controller = new GameController(client);
    await controller.newGame(7, 4, FIG1);
    controller.selectWindowAt(0);
    controller.setHeight(0, 0);
    await controller.submit();
    expect(controller.view().staleSession).toBe(true);
  });
});
