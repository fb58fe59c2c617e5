import random

import pytest

from kwicmosaic import (
    PAD,
    build_corpus,
    build_index,
    concordance,
    corpus_frequency,
    line_text,
)
from oracles import random_docs, scan_occurrences, slots_for


def test_build_index_small():
    corpus = build_corpus(["a b a"])
    index = build_index(corpus)
    assert index == {"a": [(0, 0), (0, 2)], "b": [(0, 1)]}


def test_build_index_empty_corpus():
    assert build_index(build_corpus([])) == {}


def test_build_index_across_documents():
    corpus = build_corpus(["a", "a"])
    assert build_index(corpus)["a"] == [(0, 0), (1, 0)]


def test_concordance_pads_at_document_edges():
    corpus = build_corpus(["a b c"])
    conc = concordance(corpus, build_index(corpus), "b", 4)
    assert len(conc) == 1
    line = conc.lines[0]
    assert line.left == ("a", PAD, PAD, PAD)
    assert line.right == ("c", PAD, PAD, PAD)


def test_concordance_absent_keyword_is_empty():
    corpus = build_corpus(["x"])
    conc = concordance(corpus, build_index(corpus), "y", 4)
    assert len(conc) == 0


def test_concordance_rejects_bad_window():
    corpus = build_corpus(["a b c"])
    index = build_index(corpus)
    with pytest.raises(ValueError, match="window"):
        concordance(corpus, index, "b", 0)


def test_concordance_line_count_is_planted_300():
    # one keyword occurrence per 9-token document
    rng = random.Random(3)
    docs = []
    for _ in range(300):
        ctx = [f"c{rng.randint(0, 30)}" for _ in range(8)]
        docs.append(" ".join(ctx[:4] + ["gold"] + ctx[4:]))
    corpus = build_corpus(docs)
    conc = concordance(corpus, build_index(corpus), "gold", 4)
    assert len(conc) == 300


def test_line_ids_are_stable_and_ordered():
    corpus = build_corpus(["g x g", "g"])
    conc = concordance(corpus, build_index(corpus), "g", 2)
    assert [l.line_id for l in conc.lines] == [0, 1, 2]
    assert [(l.doc_id, l.token_offset) for l in conc.lines] == [
        (0, 0),
        (0, 2),
        (1, 0),
    ]


def test_slot_accessor():
    corpus = build_corpus(["a b c d e"])
    conc = concordance(corpus, build_index(corpus), "c", 2)
    line = conc.lines[0]
    assert line.slot(-1) == "b"
    assert line.slot(-2) == "a"
    assert line.slot(1) == "d"
    assert line.slot(2) == "e"
    with pytest.raises(ValueError):
        line.slot(0)


def test_line_count_equals_corpus_frequency_random():
    rng = random.Random(17)
    docs = random_docs(rng, max_tokens=2000, max_vocab=50)
    corpus = build_corpus([" ".join(d) for d in docs])
    index = build_index(corpus)
    for word in list(corpus.frequency_table)[:20]:
        conc = concordance(corpus, index, word, 4)
        assert len(conc) == corpus_frequency(corpus, word)


def test_round_trip_slots_match_raw_documents():
    rng = random.Random(23)
    docs = random_docs(rng, max_tokens=3000, max_vocab=40)
    corpus = build_corpus([" ".join(d) for d in docs])
    index = build_index(corpus)
    for word in list(corpus.frequency_table)[:15]:
        conc = concordance(corpus, index, word, 4)
        for line in conc.lines:
            left, right = slots_for(docs, line.doc_id, line.token_offset, 4)
            assert line.left == left
            assert line.right == right


def test_index_agrees_with_naive_scan():
    rng = random.Random(29)
    docs = random_docs(rng, max_tokens=10_000, max_vocab=200)
    corpus = build_corpus([" ".join(d) for d in docs])
    index = build_index(corpus)
    for word in corpus.frequency_table:
        assert index[word] == scan_occurrences(docs, word)
    assert sum(len(v) for v in index.values()) == corpus.total_tokens


def test_line_text_basic():
    corpus = build_corpus(["a b c"])
    conc = concordance(corpus, build_index(corpus), "b", 1)
    assert line_text(conc.lines[0], corpus, 1) == "a [b] c"


def test_line_text_document_start_has_empty_left():
    corpus = build_corpus(["b c d"])
    conc = concordance(corpus, build_index(corpus), "b", 2)
    assert line_text(conc.lines[0], corpus, 2) == "[b] c d"


def test_line_text_width_equal_to_window_matches_slots():
    corpus = build_corpus(["v w x y z"])
    conc = concordance(corpus, build_index(corpus), "x", 2)
    line = conc.lines[0]
    rendered = line_text(line, corpus, 2)
    assert rendered == "v w [x] y z"
    # same token content as the slots, reading order
    assert rendered.split() == ["v", "w", "[x]", "y", "z"]


def test_line_text_rejects_width_below_window():
    corpus = build_corpus(["a b c"])
    conc = concordance(corpus, build_index(corpus), "b", 2)
    with pytest.raises(ValueError, match="display_width"):
        line_text(conc.lines[0], corpus, 1)
