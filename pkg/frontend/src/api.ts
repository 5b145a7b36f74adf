/** Typed client for the game service. The service is the single source
 * of truth for rules; this client never derives legality itself. */

export interface StackClass {
  color: number;
  height: number;
  count: number;
}

export interface HistoryEntry {
  seq: number;
  actor: "human" | "engine";
  move: string;
  rule_tag: string | null;
}

export interface SessionView {
  id: string;
  colors: number[];
  human_side: "first" | "second";
  engine_side: "first" | "second";
  state: string;
  state_angle?: string;
  stacks: StackClass[];
  to_move: "first" | "second";
  status: "in-progress" | "finished";
  winner: "first" | "second" | null;
  history: HistoryEntry[];
  predicted_winner?: "first" | "second";
  engine_reply?: {
    move: string;
    rule_tag: string;
    fallback_used: boolean;
  };
}

export interface ServiceErrorBody {
  code: string;
  message: string;
  clause?: string;
}

export class ServiceError extends Error {
  constructor(readonly body: ServiceErrorBody, readonly status: number) {
    super(body.message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.json();
  if (!response.ok) {
    throw new ServiceError(body as ServiceErrorBody, response.status);
  }
  return body as T;
}

export interface GameApi {
  createGame(p: number, q: number, humanSide: string): Promise<SessionView>;
  getGame(id: string): Promise<SessionView>;
  legalMoves(id: string): Promise<string[]>;
  submitMove(id: string, move: string): Promise<SessionView>;
  engineMove(id: string): Promise<SessionView>;
}

export function httpApi(base = ""): GameApi {
  return {
    createGame: (p, q, humanSide) =>
      request<SessionView>(`${base}/games`, {
        method: "POST",
        body: JSON.stringify({ p, q, human_side: humanSide }),
      }),
    getGame: (id) => request<SessionView>(`${base}/games/${id}`),
    legalMoves: async (id) => {
      const body = await request<{ moves: string[] }>(`${base}/games/${id}/moves`);
      return body.moves;
    },
    submitMove: (id, move) =>
      request<SessionView>(`${base}/games/${id}/moves`, {
        method: "POST",
        body: JSON.stringify({ move }),
      }),
    engineMove: (id) =>
      request<SessionView>(`${base}/games/${id}/engine-move`, { method: "POST" }),
  };
}
