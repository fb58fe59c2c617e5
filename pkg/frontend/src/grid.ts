import { CONNECTED_WHITE, FILLER_COLOR, GREY, PALETTE } from "./palette.js";
import type { ClientState } from "./state.js";
import type { TilePayload } from "./types.js";

export interface GridHandlers {
  onPromote: (keyword: string) => void;
  onSelect: (keyword: string, position: number, word: string) => void;
}

function tileColor(
  state: ClientState,
  keyword: string,
  tile: TilePayload,
): string {
  if (tile.word === null) {
    return FILLER_COLOR;
  }
  const selection = state.selection;
  if (
    selection &&
    selection.keyword === keyword &&
    selection.position !== tile.position &&
    (selection.connected[String(tile.position)] ?? []).includes(tile.word)
  ) {
    // connected words light up white, in the clicked mosaic only
    return CONNECTED_WHITE;
  }
  const rank = state.paletteMap.get(tile.word);
  return rank === undefined ? GREY : PALETTE[rank];
}

function renderTile(
  state: ClientState,
  keyword: string,
  tile: TilePayload,
  handlers: GridHandlers,
): HTMLElement {
  const el = document.createElement("div");
  el.className = "tile";
  el.style.height = `${tile.heightFraction * 100}%`;
  el.style.background = tileColor(state, keyword, tile);
  if (tile.word !== null) {
    const word = tile.word;
    el.dataset.word = word;
    el.dataset.position = String(tile.position);
    el.textContent = word;
    el.title = `${word} @ ${tile.position}: ${tile.value}`;
    const selection = state.selection;
    if (
      selection &&
      selection.keyword === keyword &&
      selection.position === tile.position &&
      selection.word === word
    ) {
      el.classList.add("selected");
    }
    el.addEventListener("click", () => handlers.onSelect(keyword, tile.position, word));
  } else {
    el.classList.add("filler");
  }
  return el;
}

function renderMosaic(
  state: ClientState,
  keyword: string,
  handlers: GridHandlers,
): HTMLElement {
  const mosaic = state.mosaics.get(keyword);
  if (!mosaic) {
    throw new Error(`no mosaic loaded for ${keyword}`);
  }
  const box = document.createElement("div");
  box.className = "mosaic";
  box.dataset.keyword = keyword;
  if (keyword === state.primaryKeyword) {
    box.classList.add("primary");
  }
  box.addEventListener("contextmenu", (event) => {
    event.preventDefault();
    handlers.onPromote(keyword);
  });

  const title = document.createElement("h3");
  title.textContent = keyword;
  box.appendChild(title);

  const columns = document.createElement("div");
  columns.className = "columns";
  for (const column of mosaic.columns) {
    const col = document.createElement("div");
    col.className = "column";
    col.dataset.position = String(column.position);
    for (const tile of column.tiles) {
      col.appendChild(renderTile(state, keyword, tile, handlers));
    }
    columns.appendChild(col);
    if (column.position === -1) {
      const spine = document.createElement("div");
      spine.className = "keyword-spine";
      spine.textContent = keyword;
      columns.appendChild(spine);
    }
  }
  box.appendChild(columns);
  return box;
}

// Grid order always equals orderedKeywords; the primary sits top-left.
export function renderGrid(
  container: HTMLElement,
  state: ClientState,
  handlers: GridHandlers,
): void {
  container.textContent = "";
  for (const keyword of state.orderedKeywords) {
    container.appendChild(renderMosaic(state, keyword, handlers));
  }
}
