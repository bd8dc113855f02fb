import type {
  ComparePayload,
  ErrorEnvelope,
  PublishRequest,
  SimilarityHit,
} from "../src/types.js";

export const TITLES: Record<string, string> = {
  R1: "Alpha survey tool",
  R2: "Beta explorer",
  R3: "Gamma viewer",
  R4: "Delta engine",
};

export const SUGGESTIONS: SimilarityHit[] = [
  { contribution: "R2", score: 0.95, percentage: 95 },
  { contribution: "R3", score: 1.0, percentage: 100 },
  { contribution: "R4", score: 0.4, percentage: 40 },
];

const GROUPS = [
  { id: "G1", label: "addresses problem", support: 99 },
  { id: "G2", label: "has approach", support: 99 },
  { id: "G3", label: "evaluation", support: 99 },
  { id: "G4", label: "lonely prop", support: 1 },
];

export function payloadFor(ids: string[], hidden: string[] = []): ComparePayload {
  const papers = ids.map((id) => ({
    paper: `P${id.slice(1)}`,
    title: TITLES[id] ?? id,
    authors: ["Some Author"],
    year: 2018,
    doi: null,
    contributions: [id],
    contributionLabel: `${TITLES[id] ?? id} (contribution)`,
  }));
  const properties = GROUPS.map((g) => ({
    id: g.id,
    label: g.label,
    members: [g.label],
    supportCount: g.support === 99 ? ids.length : g.support,
    visible: g.support >= 2 && !hidden.includes(g.id),
  }));
  const values: ComparePayload["values"] = {};
  for (const g of GROUPS) {
    values[g.id] = {};
    for (const id of ids) {
      if (g.id === "G3" && id === "R4") {
        values[g.id][id] = []; // one deliberately empty cell
      } else if (g.id === "G2" && id === "R2") {
        values[g.id][id] = [
          { display: "Web", kind: "resource", resource: "R9", provenance: ["S9"] },
        ];
      } else {
        values[g.id][id] = [
          { display: `${g.label} of ${id}`, kind: "literal", resource: null, provenance: [] },
        ];
      }
    }
  }
  return { papers, properties, values };
}

export interface FakeServer {
  fetchFn: (input: string, init?: RequestInit) => Promise<Response>;
  calls: string[];
  published: PublishRequest[];
}

/** In-memory stand-in for the comparison service. */
export function fakeServer(): FakeServer {
  const calls: string[] = [];
  const published: PublishRequest[] = [];

  function json(body: unknown, status = 200): Response {
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  }

  function notFound(message: string): Response {
    const envelope: ErrorEnvelope = { code: "not_found", message, details: null };
    return json(envelope, 404);
  }

  async function fetchFn(input: string, init?: RequestInit): Promise<Response> {
    calls.push(input);
    const url = new URL(input, "http://test.local");
    const path = url.pathname;

    if (path.startsWith("/similar/")) {
      const id = path.split("/")[2];
      if (!(id in TITLES)) return notFound(`unknown contribution ${id}`);
      const k = Number(url.searchParams.get("k") ?? "3");
      return json(SUGGESTIONS.filter((h) => h.contribution !== id).slice(0, k));
    }

    if (path === "/compare") {
      const ids = (url.searchParams.get("contributions") ?? "").split(",").filter(Boolean);
      if (ids.length < 2) {
        return json({ code: "validation_error", message: "need two ids", details: null }, 400);
      }
      return json(payloadFor(ids));
    }

    if (path === "/comparisons" && init?.method === "POST") {
      const body = JSON.parse(String(init.body)) as PublishRequest;
      if (!body.title) {
        return json({ code: "validation_error", message: "title required", details: null }, 400);
      }
      published.push(body);
      const id = `Ab${published.length}Cd0`.slice(0, 6);
      return json({ id, permalink: `/c/${id}` }, 201);
    }

    const snapshot = path.match(/^\/comparisons\/([0-9A-Za-z]{6})$/);
    if (snapshot) {
      const index = Number(snapshot[1][2]) - 1;
      const request = published[index];
      if (!request) return notFound(`no snapshot ${snapshot[1]}`);
      const hidden = request.config?.hiddenGroups ?? [];
      return json({
        id: snapshot[1],
        metadata: { title: request.title, created: "2026-01-01T00:00:00Z" },
        table: {
          config: {
            minShared: request.config?.alpha ?? 2,
            threshold: request.config?.tau ?? 0.9,
            maxDepth: request.config?.delta ?? 5,
            topK: 3,
            transposed: request.config?.transposed ?? false,
            hiddenGroups: hidden,
            rowOrder: request.config?.rowOrder ?? [],
          },
        },
        payload: payloadFor(request.contributions, hidden),
      });
    }

    const resource = path.match(/^\/resources\/([^/]+)\/statements$/);
    if (resource) {
      if (resource[1] !== "R9") return notFound(`unknown resource ${resource[1]}`);
      return json({
        id: "R9",
        label: "Web",
        statements: [
          { id: "S9", predicate: "runs on", object: "browser", kind: "literal" },
        ],
      });
    }

    return notFound(`no route for ${path}`);
  }

  return { fetchFn, calls, published };
}
