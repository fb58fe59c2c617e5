"""Corpus ingestion: tokenization and the immutable corpus model.

Tokenizer policy: split on Unicode whitespace, strip leading/trailing
punctuation from each chunk, keep word-internal apostrophes and hyphens,
optionally lowercase. Chunks that are all punctuation vanish. Stop words
are kept; function words are legitimate collocates here.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import IngestError


@dataclass(frozen=True)
class TokenizerConfig:
    """Tokenization knobs, recorded inside the corpus for reproducibility."""

    lowercase: bool = True


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def tokenize(text: str, config: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Split ``text`` into normalized tokens, in source order.

    Pure and deterministic: the same text and config always produce the
    same token list. Empty input yields an empty list.
    """
    tokens: list[str] = []
    for chunk in text.split():
        start = 0
        end = len(chunk)
        while start < end and _is_punct(chunk[start]):
            start += 1
        while end > start and _is_punct(chunk[end - 1]):
            end -= 1
        word = chunk[start:end]
        if not word:
            continue
        if config.lowercase:
            word = word.lower()
        tokens.append(word)
    return tokens


@dataclass(frozen=True)
class Corpus:
    """Immutable tokenized corpus with a global frequency table.

    Invariants (checked by the test suite):
      * ``total_tokens`` equals the sum of all document lengths
      * ``frequency_table`` sums to ``total_tokens`` and covers every
        distinct token exactly once

    Context windows never cross document boundaries, so documents are the
    unit of truncation for concordance extraction.
    """

    documents: tuple[tuple[str, ...], ...]
    doc_names: tuple[str, ...]
    config: TokenizerConfig
    frequency_table: dict[str, int] = field(repr=False)
    total_tokens: int = 0

    def frequency(self, word: str) -> int:
        """Corpus-wide occurrence count; 0 for unseen words."""
        return self.frequency_table.get(word, 0)


def build_corpus(
    documents: list[str],
    config: TokenizerConfig = TokenizerConfig(),
    doc_names: list[str] | None = None,
) -> Corpus:
    """Tokenize raw document strings and assemble a corpus.

    Document order is preserved. Tokenization failures are reported with
    the index of the offending document.
    """
    if doc_names is not None and len(doc_names) != len(documents):
        raise ValueError("doc_names must match documents in length")
    tokenized: list[tuple[str, ...]] = []
    for i, text in enumerate(documents):
        try:
            tokenized.append(tuple(tokenize(text, config)))
        except Exception as exc:  # pragma: no cover - tokenize is total on str
            raise IngestError(f"document {i}: {exc}") from exc
    names = tuple(doc_names) if doc_names is not None else tuple(
        f"doc{i}" for i in range(len(documents))
    )
    return from_tokenized(tokenized, names, config)


def from_tokenized(
    documents: list[tuple[str, ...]] | tuple[tuple[str, ...], ...],
    doc_names: tuple[str, ...],
    config: TokenizerConfig,
) -> Corpus:
    """Assemble a corpus from already-tokenized documents."""
    docs = tuple(tuple(doc) for doc in documents)
    freq: Counter[str] = Counter()
    for doc in docs:
        freq.update(doc)
    total = sum(len(doc) for doc in docs)
    return Corpus(
        documents=docs,
        doc_names=doc_names,
        config=config,
        frequency_table=dict(freq),
        total_tokens=total,
    )


def load_directory(path: str | Path, config: TokenizerConfig = TokenizerConfig()) -> Corpus:
    """Ingest every regular file under ``path`` as one UTF-8 document each.

    Files are read in lexicographic filename order so ingestion is
    deterministic. Encoding failures name the file and byte offset.
    """
    root = Path(path)
    if not root.is_dir():
        raise IngestError(f"not a directory: {root}")
    files = sorted(
        (p for p in root.iterdir() if p.is_file() and not p.name.startswith(".")),
        key=lambda p: p.name,
    )
    if not files:
        raise IngestError(f"no documents found in {root}")
    texts: list[str] = []
    for p in files:
        raw = p.read_bytes()
        try:
            texts.append(raw.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise IngestError(
                f"{p.name}: invalid UTF-8 at byte offset {exc.start}"
            ) from exc
    return build_corpus(texts, config, doc_names=[p.name for p in files])


def corpus_frequency(corpus: Corpus, word: str) -> int:
    """Occurrences of ``word`` in the whole corpus (0 if unseen)."""
    return corpus.frequency(word)
