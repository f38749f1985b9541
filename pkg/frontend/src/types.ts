// Documents and wire shapes shared with the session service.

export interface QuiverDocument {
  n: number;
  arrows: number[][]; // [from, to] or [from, to, multiplicity], 1-based
}

export type Badge = "certified" | "refuted" | "inconclusive" | "not-computed";

export interface ColumnInfo {
  vector: number[];
  sign: "positive" | "negative";
  schur: Badge;
}

export interface SessionState {
  n: number;
  b: number[][];
  c: number[][];
  g: number[][];
  word: number[];
  acyclic: boolean;
  columns: ColumnInfo[];
}

// Everything the panels render. The matrices always equal the last
// service response; the breadcrumb is the word the service reports, so
// replaying it through the CLI reproduces the displayed C.
export interface ViewState {
  sessionId: string | null;
  state: SessionState | null;
  document: QuiverDocument | null;
  presetName: string | null;
  pending: number; // queued + in-flight requests
  banner: string | null; // transport trouble, non-blocking
  loadError: string | null; // inline message under the load box
}
