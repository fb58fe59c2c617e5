import type { ConcordanceResponse, Mode, MosaicResponse } from "./types.js";

// Everything the client knows: keyword order (primary first), the fetched
// mosaics, the palette derived from the primary's top-context list, and the
// current tile selection. All numbers come from the API; this module only
// reorders and looks things up.

export interface Selection {
  keyword: string;
  position: number;
  word: string;
  connected: Record<string, string[]>;
}

export interface ClientState {
  orderedKeywords: string[];
  primaryKeyword: string;
  mode: Mode;
  window: number;
  mosaics: Map<string, MosaicResponse>;
  paletteMap: Map<string, number>;
  selection: Selection | null;
  pane: ConcordanceResponse | null;
}

export function paletteFrom(topContext: string[]): Map<string, number> {
  const palette = new Map<string, number>();
  topContext.slice(0, 20).forEach((word, rank) => palette.set(word, rank));
  return palette;
}

export function buildState(
  keywords: string[],
  mosaics: Map<string, MosaicResponse>,
  mode: Mode,
  window: number,
): ClientState {
  if (keywords.length === 0) {
    throw new Error("at least one keyword required");
  }
  const primary = keywords[0];
  const primaryMosaic = mosaics.get(primary);
  if (!primaryMosaic) {
    throw new Error(`no mosaic loaded for ${primary}`);
  }
  return {
    orderedKeywords: [...keywords],
    primaryKeyword: primary,
    mode,
    window,
    mosaics,
    paletteMap: paletteFrom(primaryMosaic.topContext),
    selection: null,
    pane: null,
  };
}

// Promotion swaps the clicked mosaic with the top-left one, so promoting
// twice restores the original grid. The palette is rebuilt from the new
// primary's top-context list; selection is cleared.
export function promote(state: ClientState, keyword: string): ClientState {
  const idx = state.orderedKeywords.indexOf(keyword);
  if (idx < 0) {
    throw new Error(`unknown keyword ${keyword}`);
  }
  const order = [...state.orderedKeywords];
  [order[0], order[idx]] = [order[idx], order[0]];
  const mosaic = state.mosaics.get(keyword);
  if (!mosaic) {
    throw new Error(`no mosaic loaded for ${keyword}`);
  }
  return {
    ...state,
    orderedKeywords: order,
    primaryKeyword: keyword,
    paletteMap: paletteFrom(mosaic.topContext),
    selection: null,
    pane: null,
  };
}

export function withSelection(
  state: ClientState,
  selection: Selection,
  pane: ConcordanceResponse,
): ClientState {
  return { ...state, selection, pane };
}

export function withPane(state: ClientState, pane: ConcordanceResponse): ClientState {
  return { ...state, pane };
}
