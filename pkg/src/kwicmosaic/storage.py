"""Index file: JSON persistence for a tokenized corpus.

The file keeps the tokenizer config and the token streams; the frequency
table and inverted index are cheap to rebuild and are derived on load, so
they can never drift out of sync with the documents.
"""

from __future__ import annotations

import json
from pathlib import Path

from .concordance import InvertedIndex, build_index
from .corpus import Corpus, TokenizerConfig, from_tokenized
from .errors import KwicParseError, KwicValidationError

FORMAT = "kwicmosaic-index"
VERSION = 1


def dumps_index(corpus: Corpus) -> bytes:
    payload = {
        "format": FORMAT,
        "version": VERSION,
        "tokenizer": {"lowercase": corpus.config.lowercase},
        "documents": [
            {"name": name, "tokens": list(tokens)}
            for name, tokens in zip(corpus.doc_names, corpus.documents)
        ],
    }
    return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def save_index(corpus: Corpus, path: str | Path) -> None:
    Path(path).write_bytes(dumps_index(corpus))


def load_index(path: str | Path) -> tuple[Corpus, InvertedIndex]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise KwicParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno} (char {exc.pos})"
        ) from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise KwicValidationError(f"not a {FORMAT} file")
    if doc.get("version") != VERSION:
        raise KwicValidationError(f"unsupported version {doc.get('version')!r}")
    tok = doc.get("tokenizer")
    if not isinstance(tok, dict) or not isinstance(tok.get("lowercase"), bool):
        raise KwicValidationError("field tokenizer.lowercase: expected bool")
    raw_docs = doc.get("documents")
    if not isinstance(raw_docs, list):
        raise KwicValidationError("field documents: expected list")
    names: list[str] = []
    token_docs: list[tuple[str, ...]] = []
    for i, entry in enumerate(raw_docs):
        if not isinstance(entry, dict):
            raise KwicValidationError(f"field documents[{i}]: expected object")
        name = entry.get("name")
        tokens = entry.get("tokens")
        if not isinstance(name, str):
            raise KwicValidationError(f"field documents[{i}].name: expected string")
        if not isinstance(tokens, list) or any(
            not isinstance(t, str) or not t for t in tokens
        ):
            raise KwicValidationError(
                f"field documents[{i}].tokens: expected list of non-empty strings"
            )
        names.append(name)
        token_docs.append(tuple(tokens))
    corpus = from_tokenized(
        token_docs, tuple(names), TokenizerConfig(lowercase=tok["lowercase"])
    )
    return corpus, build_index(corpus)
