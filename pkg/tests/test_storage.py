import json

import pytest

from kwicmosaic import KwicValidationError, TokenizerConfig, build_corpus
from kwicmosaic.storage import dumps_index, load_index, save_index


def test_index_file_round_trip(tmp_path):
    corpus = build_corpus(["bar of gold", "silver and gold"], TokenizerConfig())
    path = tmp_path / "corpus.idx.json"
    save_index(corpus, path)
    loaded, index = load_index(path)
    assert loaded.documents == corpus.documents
    assert loaded.frequency_table == corpus.frequency_table
    assert loaded.config == corpus.config
    assert index["gold"] == [(0, 2), (1, 2)]


def test_index_file_is_deterministic():
    corpus = build_corpus(["a b", "c"])
    assert dumps_index(corpus) == dumps_index(corpus)


def test_index_file_preserves_case_config(tmp_path):
    corpus = build_corpus(["The Gold"], TokenizerConfig(lowercase=False))
    path = tmp_path / "c.json"
    save_index(corpus, path)
    loaded, _ = load_index(path)
    assert loaded.config.lowercase is False
    assert "Gold" in loaded.frequency_table


def test_load_rejects_foreign_json(tmp_path):
    path = tmp_path / "other.json"
    path.write_text(json.dumps({"something": "else"}), encoding="utf-8")
    with pytest.raises(KwicValidationError, match="not a"):
        load_index(path)


def test_load_rejects_bad_documents(tmp_path):
    corpus = build_corpus(["a b"])
    doc = json.loads(dumps_index(corpus))
    doc["documents"][0]["tokens"] = ["ok", 5]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(KwicValidationError, match=r"documents\[0\]"):
        load_index(path)
