// Canned API payloads for a four-keyword grid. The numbers mirror the demo
// corpus: "of" dominates left of gold; at silver-2 "gold" leads and
// "talents" is runner-up while staying outside gold's top context words.

import type {
  ColumnPayload,
  ConcordanceResponse,
  KeywordsResponse,
  MosaicResponse,
  TilePayload,
} from "../src/types.js";

export const GOLD_TOP_CONTEXT = [
  "of", "the", "bars", "and", "silver", "heavy", "into", "temple", "crowns",
  "cups", "rings", "shields", "plates", "carried", "above", "every", "other",
  "treasure", "king", "market",
];

export const SILVER_TOP_CONTEXT = [
  "of", "gold", "talents", "the", "and", "to", "city", "bars", "sent",
  "pieces", "in", "market", "crown", "upon", "wooden", "table", "king",
  "twenty", "feast", "her",
];

function tile(
  word: string | null,
  position: number,
  value: number,
  heightFraction: number,
): TilePayload {
  return {
    word,
    position,
    value,
    heightFraction,
    color: word === null ? "filler" : "grey",
    selected: false,
    connected: false,
  };
}

function emptyColumns(window: number, overrides: Record<string, TilePayload[]>): ColumnPayload[] {
  const columns: ColumnPayload[] = [];
  for (let p = -window; p <= window; p++) {
    if (p === 0) continue;
    columns.push({ position: p, tiles: overrides[String(p)] ?? [] });
  }
  return columns;
}

export const GOLD_MOSAIC: MosaicResponse = {
  keyword: "gold",
  mode: "frequency",
  window: 4,
  lineCount: 63,
  topContext: GOLD_TOP_CONTEXT,
  columns: emptyColumns(4, {
    "-1": [tile("of", -1, 55, 55 / 63), tile("pale", -1, 5, 5 / 63), tile("fine", -1, 3, 3 / 63)],
    "-2": [tile("bars", -2, 30, 30 / 63), tile("crowns", -2, 10, 10 / 63)],
    "1": [tile("and", 1, 30, 30 / 63), tile("into", 1, 25, 25 / 63)],
    "2": [tile("silver", 2, 30, 30 / 63), tile("the", 2, 25, 25 / 63)],
  }),
};

export const SILVER_MOSAIC: MosaicResponse = {
  keyword: "silver",
  mode: "frequency",
  window: 4,
  lineCount: 64,
  topContext: SILVER_TOP_CONTEXT,
  columns: emptyColumns(4, {
    "-1": [tile("of", -1, 34, 34 / 64), tile("and", -1, 30, 30 / 64)],
    "-2": [
      tile("gold", -2, 30, 30 / 64),
      tile("talents", -2, 20, 20 / 64),
      tile("pieces", -2, 8, 8 / 64),
      tile("crown", -2, 6, 6 / 64),
    ],
    "1": [tile("to", 1, 20, 20 / 64), tile("in", 1, 30, 30 / 64)],
  }),
};

function plainMosaic(keyword: string, words: string[]): MosaicResponse {
  return {
    keyword,
    mode: "frequency",
    window: 4,
    lineCount: 20,
    topContext: words,
    columns: emptyColumns(4, {
      "-1": [tile(words[0], -1, 20, 1.0)],
      "-2": [tile(words[1], -2, 12, 0.6), tile(null, -2, 8, 0.4)],
    }),
  };
}

export const IRON_MOSAIC = plainMosaic("iron", ["of", "swords", "sharp", "into"]);
export const BRONZE_MOSAIC = plainMosaic("bronze", ["of", "shields", "statues", "for"]);

export const KEYWORDS_RESPONSE: KeywordsResponse = {
  keywords: [
    { word: "gold", count: 63 },
    { word: "iron", count: 20 },
    { word: "bronze", count: 18 },
    { word: "silver", count: 64 },
  ],
};

function line(
  lineId: number,
  left: (string | null)[],
  right: (string | null)[],
  match: boolean,
  wordPositions: number[] = [],
): ConcordanceResponse["lines"][number] {
  return { lineId, left, right, match, wordPositions };
}

export function plainConcordance(keyword: string): ConcordanceResponse {
  return {
    keyword,
    window: 4,
    total: 2,
    sortPos: null,
    matchWord: null,
    connected: null,
    lines: [
      line(0, ["of", "bars", "heavy", "weighed"], ["and", "silver", "in", "the"], false),
      line(1, ["of", "crowns", "heavy", "carried"], ["into", "the", "high", "temple"], false),
    ],
  };
}

// silver sorted at -2 with matchWord=talents: alphabetical groups
// crown < gold < pieces < talents, PAD last; the talents block is contiguous.
export const SILVER_TALENTS_VIEW: ConcordanceResponse = {
  keyword: "silver",
  window: 4,
  total: 8,
  sortPos: -2,
  matchWord: "talents",
  connected: {
    "-1": ["of"],
    "-3": ["sent"],
    "-4": ["king"],
    "1": ["to"],
    "2": ["the"],
    "3": ["city"],
    "4": ["of"],
  },
  lines: [
    line(5, ["of", "crown", "bright", "her"], ["at", "the", "great", "feast"], false),
    line(0, ["and", "gold", "of", "bars"], ["in", "the", "great", "market"], false),
    line(1, ["and", "gold", "of", "ingots"], ["in", "the", "busy", "market"], false),
    line(4, ["of", "pieces", "thirty", "counted"], ["upon", "the", "wooden", "table"], false),
    line(2, ["of", "talents", "twenty", "sent"], ["to", "the", "city", "of"], true, [-2]),
    line(3, ["of", "talents", "forty", "sent"], ["to", "the", "city", "of"], true, [-2]),
    line(6, ["of", "talents", "sixty", "sent"], ["to", "the", "city", "of"], true, [-2]),
    line(7, ["of", "talents", null, null], ["to", "the", null, null], true, [-2]),
  ],
};

type Payload =
  | KeywordsResponse
  | MosaicResponse
  | ConcordanceResponse
  | { error: string };

export interface RecordedFetch {
  calls: string[];
  restore: () => void;
}

// Install a fetch stub keyed by exact path+query; records every request so
// tests can assert that all displayed numbers came over the wire.
export function installFetch(
  routes: Record<string, Payload | (() => Promise<Payload>)>,
): RecordedFetch {
  const calls: string[] = [];
  const original = globalThis.fetch;

  globalThis.fetch = (async (input: RequestInfo | URL) => {
    const url = String(input);
    calls.push(url);
    const route = routes[url];
    if (route === undefined) {
      return {
        ok: false,
        status: 404,
        statusText: "Not Found",
        json: async () => ({ error: `no fixture for ${url}` }),
      } as Response;
    }
    const payload = typeof route === "function" ? await route() : route;
    if ("error" in payload) {
      return {
        ok: false,
        status: 404,
        statusText: "Not Found",
        json: async () => payload,
      } as Response;
    }
    return { ok: true, status: 200, json: async () => payload } as Response;
  }) as typeof fetch;

  return {
    calls,
    restore: () => {
      globalThis.fetch = original;
    },
  };
}

export function defaultRoutes(): Record<string, Payload> {
  return {
    "/api/keywords": KEYWORDS_RESPONSE,
    "/api/mosaic/gold?mode=frequency&window=4": GOLD_MOSAIC,
    "/api/mosaic/iron?mode=frequency&window=4": IRON_MOSAIC,
    "/api/mosaic/bronze?mode=frequency&window=4": BRONZE_MOSAIC,
    "/api/mosaic/silver?mode=frequency&window=4": SILVER_MOSAIC,
    "/api/concordance/gold?window=4": plainConcordance("gold"),
    "/api/concordance/iron?window=4": plainConcordance("iron"),
    "/api/concordance/bronze?window=4": plainConcordance("bronze"),
    "/api/concordance/silver?window=4": plainConcordance("silver"),
    "/api/concordance/silver?sortPos=-2&matchWord=talents&mode=frequency&window=4":
      SILVER_TALENTS_VIEW,
    "/api/concordance/iron?sortPos=-1&matchWord=of&mode=frequency&window=4":
      IRON_OF_VIEW,
  };
}

// "of" fills iron's whole -1 column, so every line matches.
export const IRON_OF_VIEW: ConcordanceResponse = {
  keyword: "iron",
  window: 4,
  total: 2,
  sortPos: -1,
  matchWord: "of",
  connected: { "-2": ["swords", "tools"], "1": ["into", "beside"] },
  lines: [
    line(0, ["of", "swords", "sharp", "carried"], ["into", "the", "northern", "battle"], true, [-1]),
    line(1, ["of", "tools", "strong", "forged"], ["beside", "the", "glowing", "furnace"], true, [-1]),
  ],
};

export const APP_SHELL = `
  <header>
    <form id="keyword-form">
      <input id="keyword-input" type="text" />
      <button type="submit">load</button>
    </form>
  </header>
  <div id="error-banner" class="hidden"></div>
  <div id="grid"></div>
  <div id="pane"></div>
`;
