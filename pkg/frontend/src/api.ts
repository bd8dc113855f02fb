import type {
  ComparePayload,
  ErrorEnvelope,
  PublishRequest,
  PublishResponse,
  ResourceStatements,
  SimilarityHit,
  SnapshotResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly envelope: ErrorEnvelope,
  ) {
    super(envelope.message);
    this.name = "ApiError";
  }
}

export interface CompareOptions {
  tau?: number;
  alpha?: number;
  delta?: number;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin typed client over the comparison service.
 *
 * Concurrent GETs for the same URL are deduplicated: callers share one
 * in-flight request and the entry is dropped once it settles.
 */
export class ApiClient {
  private inflight = new Map<string, Promise<unknown>>();

  constructor(
    private baseUrl = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body as ErrorEnvelope);
    }
    return body as T;
  }

  private getJson<T>(path: string): Promise<T> {
    const pending = this.inflight.get(path);
    if (pending) {
      return pending as Promise<T>;
    }
    const promise = this.request<T>(path).finally(() => {
      this.inflight.delete(path);
    });
    this.inflight.set(path, promise);
    return promise;
  }

  similar(contribution: string, k?: number): Promise<SimilarityHit[]> {
    const query = k === undefined ? "" : `?k=${k}`;
    return this.getJson(`/similar/${encodeURIComponent(contribution)}${query}`);
  }

  compare(contributions: string[], options: CompareOptions = {}): Promise<ComparePayload> {
    const params = new URLSearchParams({ contributions: contributions.join(",") });
    if (options.tau !== undefined) params.set("tau", String(options.tau));
    if (options.alpha !== undefined) params.set("alpha", String(options.alpha));
    if (options.delta !== undefined) params.set("delta", String(options.delta));
    return this.getJson(`/compare?${params.toString()}`);
  }

  publish(body: PublishRequest): Promise<PublishResponse> {
    return this.request("/comparisons", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  getComparison(id: string): Promise<SnapshotResponse> {
    return this.getJson(`/comparisons/${encodeURIComponent(id)}`);
  }

  resourceStatements(id: string): Promise<ResourceStatements> {
    return this.getJson(`/resources/${encodeURIComponent(id)}/statements`);
  }

  exportUrl(id: string, format: "csv" | "latex" | "rdf-meta" | "rdf-cube"): string {
    return `${this.baseUrl}/comparisons/${encodeURIComponent(id)}/export?format=${format}`;
  }
}
