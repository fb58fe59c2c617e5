// Payload shapes of the read-only concordance API. These mirror the
// server's published JSON schemas; the client treats every number in them
// as authoritative and never derives its own statistics.

export type Mode = "frequency" | "colloc";

export interface KeywordEntry {
  word: string;
  count: number;
}

export interface KeywordsResponse {
  keywords: KeywordEntry[];
}

export interface TilePayload {
  word: string | null;
  position: number;
  value: number;
  heightFraction: number;
  color: number | "grey" | "filler";
  selected: boolean;
  connected: boolean;
}

export interface ColumnPayload {
  position: number;
  tiles: TilePayload[];
}

export interface MosaicResponse {
  keyword: string;
  mode: Mode;
  window: number;
  lineCount: number;
  topContext: string[];
  columns: ColumnPayload[];
}

export interface LinePayload {
  lineId: number;
  left: (string | null)[];
  right: (string | null)[];
  match: boolean;
  wordPositions: number[];
}

export interface ConcordanceResponse {
  keyword: string;
  window: number;
  total: number;
  sortPos: number | null;
  matchWord: string | null;
  lines: LinePayload[];
  connected: Record<string, string[]> | null;
}
