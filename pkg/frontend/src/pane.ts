import type { ConcordanceResponse, LinePayload } from "./types.js";

// Textual concordance pane. The keyword column is blue, lines matching the
// clicked (position, word) pattern are cyan, and every occurrence of the
// clicked word is pink. A token is never both blue and pink: the center
// column is the keyword's own slot.

function tokenSpan(
  word: string | null,
  position: number,
  line: LinePayload,
): HTMLElement {
  const span = document.createElement("span");
  span.className = "token";
  span.dataset.position = String(position);
  span.textContent = word ?? "";
  if (word !== null && line.wordPositions.includes(position)) {
    span.classList.add("pink");
  }
  return span;
}

function renderLine(line: LinePayload, keyword: string): HTMLElement {
  const row = document.createElement("div");
  row.className = "line";
  row.dataset.lineId = String(line.lineId);
  if (line.match) {
    row.classList.add("cyan");
  }

  // left slots arrive adjacent-first; display in reading order
  for (let i = line.left.length - 1; i >= 0; i--) {
    row.appendChild(tokenSpan(line.left[i], -(i + 1), line));
  }

  const center = document.createElement("span");
  center.className = "token keyword blue";
  center.dataset.position = "0";
  center.textContent = keyword;
  row.appendChild(center);

  for (let i = 0; i < line.right.length; i++) {
    row.appendChild(tokenSpan(line.right[i], i + 1, line));
  }
  return row;
}

export function renderPane(container: HTMLElement, view: ConcordanceResponse): void {
  container.textContent = "";
  const heading = document.createElement("h2");
  heading.textContent =
    view.sortPos === null
      ? `${view.keyword} — ${view.total} lines`
      : `${view.keyword} — ${view.total} lines, sorted at ${view.sortPos}` +
        (view.matchWord ? `, matching "${view.matchWord}"` : "");
  container.appendChild(heading);

  const list = document.createElement("div");
  list.className = "lines";
  for (const line of view.lines) {
    list.appendChild(renderLine(line, view.keyword));
  }
  container.appendChild(list);
}
