"""KWIC JSON files: deterministic export and validating import.

Layout, with keys always emitted in this order:

    {
      "keyword": "gold",
      "window": 4,
      "lines": [{"left": [..4 slots..], "kw": "gold", "right": [..4 slots..]}],
      "corpusMeta": {"totalTokens": N, "frequencies": {"word": count, ...}}
    }

Slots are adjacent-first; PAD is null. ``corpusMeta.frequencies`` covers
every word appearing in the file so collocation strength stays computable
without the source corpus. Two exports of the same data are byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .concordance import Concordance, ConcordanceLine
from .corpus import Corpus
from .errors import KwicParseError, KwicValidationError


def kwic_payload(conc: Concordance, corpus: Corpus) -> dict:
    """The file content as a plain dict (schema key order)."""
    if len(conc) == 0:
        raise ValueError("cannot export an empty concordance")
    words = {conc.keyword}
    for line in conc.lines:
        words.update(w for w in line.left if w is not None)
        words.update(w for w in line.right if w is not None)
    return {
        "keyword": conc.keyword,
        "window": conc.window,
        "lines": [
            {"left": list(line.left), "kw": conc.keyword, "right": list(line.right)}
            for line in conc.lines
        ],
        "corpusMeta": {
            "totalTokens": corpus.total_tokens,
            "frequencies": {w: corpus.frequency(w) for w in sorted(words)},
        },
    }


def dumps_kwic(conc: Concordance, corpus: Corpus) -> bytes:
    return (
        json.dumps(kwic_payload(conc, corpus), ensure_ascii=False, indent=2) + "\n"
    ).encode("utf-8")


def export_kwic(conc: Concordance, corpus: Corpus, path: str | Path) -> None:
    Path(path).write_bytes(dumps_kwic(conc, corpus))


def _require(obj: dict, field: str, kind: type, where: str = ""):
    prefix = f"{where}." if where else ""
    if field not in obj:
        raise KwicValidationError(f"missing field {prefix}{field}")
    value = obj[field]
    # bool is an int subclass; reject it where ints are expected
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise KwicValidationError(
            f"field {prefix}{field}: expected {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _check_slots(slots, window: int, where: str) -> tuple[str | None, ...]:
    if not isinstance(slots, list):
        raise KwicValidationError(f"field {where}: expected list")
    if len(slots) != window:
        raise KwicValidationError(
            f"field {where}: expected {window} slots, got {len(slots)}"
        )
    seen_pad = False
    for j, slot in enumerate(slots):
        if slot is None:
            seen_pad = True
            continue
        if not isinstance(slot, str) or not slot or any(c.isspace() for c in slot):
            raise KwicValidationError(f"field {where}[{j}]: invalid token {slot!r}")
        if seen_pad:
            # slots are adjacent-first, so PAD may only trail
            raise KwicValidationError(
                f"field {where}: word after PAD (truncation must be contiguous)"
            )
    return tuple(slots)


def parse_kwic(data: bytes | str) -> tuple[Concordance, dict[str, int]]:
    """Parse and validate KWIC file content.

    Returns the concordance (lines detached from any corpus: no doc ids)
    plus the frequency map needed for offline collocation strength.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise KwicParseError(
                f"invalid UTF-8 at byte offset {exc.start}"
            ) from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise KwicParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno} (char {exc.pos})"
        ) from exc
    if not isinstance(doc, dict):
        raise KwicValidationError("top level must be an object")

    keyword = _require(doc, "keyword", str)
    window = _require(doc, "window", int)
    if window < 1:
        raise KwicValidationError(f"field window: must be >= 1, got {window}")
    raw_lines = _require(doc, "lines", list)
    if not raw_lines:
        raise KwicValidationError("field lines: must be non-empty")
    meta = _require(doc, "corpusMeta", dict)
    total_tokens = _require(meta, "totalTokens", int, "corpusMeta")
    frequencies = _require(meta, "frequencies", dict, "corpusMeta")
    for w, n in frequencies.items():
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise KwicValidationError(
                f"field corpusMeta.frequencies[{w!r}]: expected positive count"
            )
    if total_tokens < 1:
        raise KwicValidationError("field corpusMeta.totalTokens: must be >= 1")

    lines: list[ConcordanceLine] = []
    words_seen: set[str] = {keyword}
    for i, raw in enumerate(raw_lines):
        where = f"lines[{i}]"
        if not isinstance(raw, dict):
            raise KwicValidationError(f"field {where}: expected object")
        kw = _require(raw, "kw", str, where)
        if kw != keyword:
            raise KwicValidationError(
                f"field {where}.kw: {kw!r} does not match keyword {keyword!r}"
            )
        left = _check_slots(raw.get("left"), window, f"{where}.left")
        right = _check_slots(raw.get("right"), window, f"{where}.right")
        words_seen.update(w for w in left if w is not None)
        words_seen.update(w for w in right if w is not None)
        lines.append(
            ConcordanceLine(
                line_id=i, doc_id=None, token_offset=None, left=left, right=right
            )
        )
    missing = sorted(words_seen - set(frequencies))
    if missing:
        raise KwicValidationError(
            f"field corpusMeta.frequencies: missing words {missing[:5]}"
        )
    conc = Concordance(keyword=keyword, window=window, lines=tuple(lines))
    return conc, dict(frequencies)


def import_kwic(path: str | Path) -> tuple[Concordance, dict[str, int]]:
    return parse_kwic(Path(path).read_bytes())


def structurally_equal(a: Concordance, b: Concordance) -> bool:
    """Equality on content: keyword, window, and ordered line slots.

    Provenance (doc ids, offsets) is ignored; the file format does not
    carry it.
    """
    return (
        a.keyword == b.keyword
        and a.window == b.window
        and len(a) == len(b)
        and all(
            la.left == lb.left and la.right == lb.right
            for la, lb in zip(a.lines, b.lines)
        )
    )
