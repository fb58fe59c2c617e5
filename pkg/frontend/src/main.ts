import { getConcordance, getKeywords, getMosaic } from "./api.js";
import { renderGrid } from "./grid.js";
import { renderPane } from "./pane.js";
import {
  buildState,
  promote,
  withPane,
  withSelection,
  type ClientState,
} from "./state.js";
import type { Mode, MosaicResponse } from "./types.js";

const DEFAULT_WINDOW = 4;
const DEFAULT_KEYWORD_COUNT = 4;

interface Elements {
  grid: HTMLElement;
  pane: HTMLElement;
  banner: HTMLElement;
  form: HTMLFormElement;
  input: HTMLInputElement;
}

let state: ClientState | null = null;
// Monotonic counter so a slow response can never overwrite a newer one.
let requestSeq = 0;

function showError(banner: HTMLElement, message: string): void {
  banner.textContent = message;
  banner.classList.remove("hidden");
}

function clearError(banner: HTMLElement): void {
  banner.textContent = "";
  banner.classList.add("hidden");
}

function redraw(els: Elements): void {
  if (!state) return;
  renderGrid(els.grid, state, {
    onPromote: (keyword) => handlePromote(els, keyword),
    onSelect: (keyword, position, word) => handleSelect(els, keyword, position, word),
  });
  if (state.pane) {
    renderPane(els.pane, state.pane);
  }
}

async function handlePromote(els: Elements, keyword: string): Promise<void> {
  if (!state || keyword === state.primaryKeyword) {
    return; // right-clicking the primary is a no-op
  }
  const seq = ++requestSeq;
  const promoted = promote(state, keyword);
  try {
    const pane = await getConcordance(keyword, { window: promoted.window });
    if (seq !== requestSeq) return;
    state = withPane(promoted, pane);
    clearError(els.banner);
    redraw(els);
  } catch (err) {
    if (seq !== requestSeq) return;
    showError(els.banner, `promote failed: ${(err as Error).message}`);
  }
}

async function handleSelect(
  els: Elements,
  keyword: string,
  position: number,
  word: string,
): Promise<void> {
  if (!state) return;
  const seq = ++requestSeq;
  try {
    const pane = await getConcordance(keyword, {
      sortPos: position,
      matchWord: word,
      mode: state.mode,
      window: state.window,
    });
    if (seq !== requestSeq) return; // superseded by a newer interaction
    state = withSelection(
      state,
      { keyword, position, word, connected: pane.connected ?? {} },
      pane,
    );
    clearError(els.banner);
    redraw(els);
  } catch (err) {
    if (seq !== requestSeq) return;
    // keep the previous pane and grid
    showError(els.banner, `selection failed: ${(err as Error).message}`);
  }
}

async function loadKeywords(els: Elements, keywords: string[], mode: Mode): Promise<void> {
  const seq = ++requestSeq;
  try {
    const mosaics = new Map<string, MosaicResponse>();
    const fetched = await Promise.all(
      keywords.map((kw) => getMosaic(kw, mode, DEFAULT_WINDOW)),
    );
    fetched.forEach((mosaic) => mosaics.set(mosaic.keyword, mosaic));
    const fresh = buildState(keywords, mosaics, mode, DEFAULT_WINDOW);
    const pane = await getConcordance(fresh.primaryKeyword, {
      window: DEFAULT_WINDOW,
    });
    if (seq !== requestSeq) return;
    state = withPane(fresh, pane);
    clearError(els.banner);
    redraw(els);
  } catch (err) {
    if (seq !== requestSeq) return;
    showError(els.banner, `load failed: ${(err as Error).message}`);
  }
}

function parseKeywordList(raw: string): string[] {
  return raw
    .split(",")
    .map((s) => s.trim().toLowerCase())
    .filter((s) => s.length > 0);
}

export async function bootstrap(root: Document = document): Promise<void> {
  const els: Elements = {
    grid: root.getElementById("grid") as HTMLElement,
    pane: root.getElementById("pane") as HTMLElement,
    banner: root.getElementById("error-banner") as HTMLElement,
    form: root.getElementById("keyword-form") as HTMLFormElement,
    input: root.getElementById("keyword-input") as HTMLInputElement,
  };

  els.form.addEventListener("submit", (event) => {
    event.preventDefault();
    const keywords = parseKeywordList(els.input.value);
    if (keywords.length > 0) {
      void loadKeywords(els, keywords, state?.mode ?? "frequency");
    }
  });

  const params = new URLSearchParams(root.defaultView?.location.search ?? "");
  const mode = (params.get("mode") as Mode | null) ?? "frequency";
  let keywords = parseKeywordList(params.get("keywords") ?? "");
  try {
    if (keywords.length === 0) {
      const listing = await getKeywords();
      keywords = listing.keywords
        .slice(0, DEFAULT_KEYWORD_COUNT)
        .map((entry) => entry.word);
    }
    if (keywords.length === 0) {
      showError(els.banner, "no keywords available in this corpus");
      return;
    }
    els.input.value = keywords.join(", ");
    await loadKeywords(els, keywords, mode);
  } catch (err) {
    showError(els.banner, `load failed: ${(err as Error).message}`);
  }
}

// Only auto-boot in a real page; tests drive bootstrap() themselves.
if (typeof document !== "undefined" && document.getElementById("grid")) {
  void bootstrap();
}
