import type { ConcordanceResponse, KeywordsResponse, Mode, MosaicResponse } from "./types.js";

async function fetchJson<T>(path: string): Promise<T> {
  const res = await fetch(path);
  if (!res.ok) {
    const body = await res.json().catch(() => ({ error: res.statusText }));
    throw new Error(body.error ?? `API error ${res.status}`);
  }
  return res.json() as Promise<T>;
}

export function getKeywords(): Promise<KeywordsResponse> {
  return fetchJson("/api/keywords");
}

export function getMosaic(
  keyword: string,
  mode: Mode,
  window: number,
): Promise<MosaicResponse> {
  const params = new URLSearchParams({ mode, window: String(window) });
  return fetchJson(`/api/mosaic/${encodeURIComponent(keyword)}?${params}`);
}

export function getConcordance(
  keyword: string,
  options: { sortPos?: number; matchWord?: string; mode?: Mode; window?: number } = {},
): Promise<ConcordanceResponse> {
  const params = new URLSearchParams();
  if (options.sortPos !== undefined) params.set("sortPos", String(options.sortPos));
  if (options.matchWord !== undefined) params.set("matchWord", options.matchWord);
  if (options.mode !== undefined) params.set("mode", options.mode);
  if (options.window !== undefined) params.set("window", String(options.window));
  const query = params.toString();
  const suffix = query ? `?${query}` : "";
  return fetchJson(`/api/concordance/${encodeURIComponent(keyword)}${suffix}`);
}
