import type {
  AnalyzeResponse,
  ApiErrorBody,
  CreateGameResponse,
  GameState,
  MoveResponse,
} from './types';

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

// The controller depends on this interface; tests plug in a stub.
export interface ApiClient {
  createGame(n: number, k: number, heights?: number[]): Promise<CreateGameResponse>;
  getGame(id: string): Promise<GameState>;
  postMove(
    id: string,
    windowStart: number,
    newHeights: number[],
    ply: number,
  ): Promise<MoveResponse>;
  analyze(n: number, k: number, heights: number[]): Promise<AnalyzeResponse>;
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  });
  if (!res.ok) {
    let body: ApiErrorBody;
    try {
      body = (await res.json()) as ApiErrorBody;
    } catch {
      body = { code: 'http_error', message: res.statusText };
    }
    throw new ApiError(res.status, body);
  }
  return (await res.json()) as T;
}

export function createHttpClient(baseUrl = ''): ApiClient {
  return {
    createGame(n, k, heights) {
      return request<CreateGameResponse>(`${baseUrl}/games`, {
        method: 'POST',
        body: JSON.stringify(heights ? { n, k, heights } : { n, k }),
      });
    },
    getGame(id) {
      return request<GameState>(`${baseUrl}/games/${id}`);
    },
    postMove(id, windowStart, newHeights, ply) {
      return request<MoveResponse>(`${baseUrl}/games/${id}/moves`, {
        method: 'POST',
        body: JSON.stringify({
          window_start: windowStart,
          new_heights: newHeights,
          ply,
        }),
      });
    },
    analyze(n, k, heights) {
      const params = new URLSearchParams({
        n: String(n),
        k: String(k),
        heights: heights.join(','),
      });
      return request<AnalyzeResponse>(`${baseUrl}/analyze?${params}`);
    },
  };
}
