"""Positional frequency tables and collocation-strength scoring.

These are the quantities a mosaic encodes: how often each word fills each
relative position across a keyword's concordance, and how surprising that
is given the word's corpus-wide frequency.
"""

from __future__ import annotations

from dataclasses import dataclass

from .concordance import Concordance, positions
from .corpus import Corpus
from .errors import NoDataError


@dataclass(frozen=True)
class PositionalFrequencyTable:
    """Per-position word counts over a concordance.

    ``counts[p][w]`` is the number of lines whose slot at ``p`` holds ``w``;
    PAD never appears. ``truncated[p]`` counts the lines whose slot at ``p``
    is PAD, so for every position counts + truncated = ``line_count``.
    """

    keyword: str
    window: int
    line_count: int
    counts: dict[int, dict[str, int]]
    truncated: dict[int, int]


def positional_frequencies(conc: Concordance) -> PositionalFrequencyTable:
    counts: dict[int, dict[str, int]] = {p: {} for p in positions(conc.window)}
    truncated: dict[int, int] = {p: 0 for p in positions(conc.window)}
    for line in conc.lines:
        for p in positions(conc.window):
            word = line.slot(p)
            if word is None:
                truncated[p] += 1
            else:
                counts[p][word] = counts[p].get(word, 0) + 1
    return PositionalFrequencyTable(
        keyword=conc.keyword,
        window=conc.window,
        line_count=len(conc.lines),
        counts=counts,
        truncated=truncated,
    )


def _check_position(table: PositionalFrequencyTable, position: int) -> None:
    if position == 0 or abs(position) > table.window:
        raise ValueError(f"position {position} outside ±{table.window} window")


def most_frequent_at(table: PositionalFrequencyTable, position: int) -> str:
    """Word with the highest count at ``position``; ties break alphabetically."""
    _check_position(table, position)
    bucket = table.counts[position]
    if not bucket:
        raise NoDataError(f"no words at position {position}")
    return min(bucket.items(), key=lambda kv: (-kv[1], kv[0]))[0]


@dataclass(frozen=True)
class CollocationScore:
    """Positional lift of a word: relative positional frequency over
    relative corpus frequency. High when a word is frequent at the position
    but rare in the corpus overall."""

    word: str
    position: int
    score: float
    positional_count: int
    corpus_count: int


def collocation_strength(
    table: PositionalFrequencyTable, corpus: Corpus, word: str, position: int
) -> CollocationScore:
    """Score = (count at position / lines) / (corpus count / total tokens).

    Requires the word to occur at the position at least once, which also
    guarantees a nonzero corpus count.
    """
    _check_position(table, position)
    positional_count = table.counts[position].get(word, 0)
    if positional_count < 1:
        raise NoDataError(f"{word!r} does not occur at position {position}")
    corpus_count = corpus.frequency(word)
    score = (positional_count / table.line_count) / (
        corpus_count / corpus.total_tokens
    )
    return CollocationScore(
        word=word,
        position=position,
        score=score,
        positional_count=positional_count,
        corpus_count=corpus_count,
    )


def top_context_words(
    table: PositionalFrequencyTable, k: int = 20
) -> list[tuple[str, int]]:
    """The k most frequent context words with 1-based ranks.

    Counts are summed over all 2W positions of the window. Ranking is by
    total count descending, ties alphabetical, so output is deterministic
    and prefix-stable in k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    totals: dict[str, int] = {}
    for bucket in table.counts.values():
        for word, n in bucket.items():
            totals[word] = totals.get(word, 0) + n
    ranked = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(word, rank) for rank, (word, _) in enumerate(ranked[:k], start=1)]
