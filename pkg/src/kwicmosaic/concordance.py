"""Inverted index and keyword-in-context extraction.

Context slots are stored adjacent-first: ``left[0]`` is the token directly
before the keyword (relative position -1), ``left[window-1]`` the farthest.
Truncation at a document edge is marked with PAD (``None``); PAD only ever
forms a contiguous run at the far end of a side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus

# Sentinel for a truncated context slot. PAD is layout, not language: it is
# excluded from every statistic but participates in column normalization.
PAD = None

InvertedIndex = dict[str, list[tuple[int, int]]]


def build_index(corpus: Corpus) -> InvertedIndex:
    """Map every word to its ordered (doc_id, token_offset) occurrence list.

    Occurrence lists come out sorted because documents and tokens are
    scanned in corpus order.
    """
    index: InvertedIndex = {}
    for doc_id, doc in enumerate(corpus.documents):
        for offset, word in enumerate(doc):
            index.setdefault(word, []).append((doc_id, offset))
    return index


@dataclass(frozen=True)
class ConcordanceLine:
    """One keyword occurrence with fixed-width context.

    ``doc_id``/``token_offset`` are None for lines imported from a KWIC
    file, which carries no corpus provenance.
    """

    line_id: int
    doc_id: int | None
    token_offset: int | None
    left: tuple[str | None, ...]
    right: tuple[str | None, ...]

    def slot(self, position: int) -> str | None:
        """Word at relative ``position`` (negative = left), PAD as None."""
        if position < 0:
            return self.left[-position - 1]
        if position > 0:
            return self.right[position - 1]
        raise ValueError("position 0 is the keyword itself")


@dataclass(frozen=True)
class Concordance:
    keyword: str
    window: int
    lines: tuple[ConcordanceLine, ...]

    def __len__(self) -> int:
        return len(self.lines)


def positions(window: int) -> list[int]:
    """All relative context positions for a window: -W..-1 then +1..+W."""
    return list(range(-window, 0)) + list(range(1, window + 1))


def concordance(
    corpus: Corpus, index: InvertedIndex, keyword: str, window: int = 4
) -> Concordance:
    """Extract one concordance line per occurrence of ``keyword``.

    Lines follow corpus order and line_ids are assigned in that order. An
    absent keyword yields an empty concordance, not an error.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    lines: list[ConcordanceLine] = []
    for line_id, (doc_id, offset) in enumerate(index.get(keyword, [])):
        doc = corpus.documents[doc_id]
        left = tuple(
            doc[offset - 1 - i] if offset - 1 - i >= 0 else PAD
            for i in range(window)
        )
        right = tuple(
            doc[offset + 1 + i] if offset + 1 + i < len(doc) else PAD
            for i in range(window)
        )
        lines.append(ConcordanceLine(line_id, doc_id, offset, left, right))
    return Concordance(keyword=keyword, window=window, lines=tuple(lines))


def line_text(line: ConcordanceLine, corpus: Corpus, display_width: int) -> str:
    """Render a line as text with the keyword bracketed centrally.

    Up to ``display_width`` tokens per side are pulled from the source
    document; truncated slots render as nothing. Requires an attached line
    (one extracted from a corpus, not imported from a file).
    """
    if line.doc_id is None or line.token_offset is None:
        raise ValueError("line has no corpus provenance")
    if display_width < len(line.left):
        raise ValueError("display_width must be >= the extraction window")
    doc = corpus.documents[line.doc_id]
    t = line.token_offset
    left = doc[max(0, t - display_width) : t]
    right = doc[t + 1 : t + 1 + display_width]
    parts = list(left) + [f"[{doc[t]}]"] + list(right)
    return " ".join(parts)
