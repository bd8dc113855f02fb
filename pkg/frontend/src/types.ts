/** Wire types mirroring the comparison service JSON. */

export interface SimilarityHit {
  contribution: string;
  score: number;
  percentage: number;
}

export interface PaperRef {
  paper: string | null;
  title: string;
  authors: string[];
  year: number | null;
  doi: string | null;
  contributions: string[];
  contributionLabel: string;
}

export interface PropertyRow {
  id: string;
  label: string;
  members: string[];
  supportCount: number;
  visible: boolean;
}

export interface CellValue {
  display: string;
  kind: "literal" | "resource";
  resource: string | null;
  provenance: string[];
}

export interface ComparePayload {
  papers: PaperRef[];
  properties: PropertyRow[];
  values: Record<string, Record<string, CellValue[]>>;
}

export interface ErrorEnvelope {
  code: string;
  message: string;
  details: unknown;
}

export interface PublishConfig {
  tau?: number;
  alpha?: number;
  delta?: number;
  transposed?: boolean;
  hiddenGroups?: string[];
  rowOrder?: string[];
}

export interface PublishRequest {
  title: string;
  description?: string;
  creator?: string;
  contributions: string[];
  config?: PublishConfig;
}

export interface PublishResponse {
  id: string;
  permalink: string;
}

export interface TableConfig {
  minShared: number;
  threshold: number;
  maxDepth: number;
  topK: number;
  transposed: boolean;
  hiddenGroups: string[];
  rowOrder: string[];
}

export interface SnapshotResponse {
  id: string;
  metadata: { title: string; created: string; [key: string]: unknown };
  table: { config: TableConfig; [key: string]: unknown };
  payload: ComparePayload;
}

export interface ResourceStatements {
  id: string;
  label: string;
  statements: { id: string; predicate: string; object: string; kind: string }[];
}
