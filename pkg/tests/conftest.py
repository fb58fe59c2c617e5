"""Shared fixtures: a tiny hand-checkable corpus and the shipped demo corpus."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from kwicmosaic import build_corpus, build_index, load_directory

REPO_ROOT = Path(__file__).resolve().parents[1]
DEMO_DIR = REPO_ROOT / "data" / "demo"
SCHEMA_DIR = REPO_ROOT / "schemas"


@pytest.fixture
def tiny_corpus():
    """Spec's 6-chunk corpus: 'of gold . bar of gold' in one document."""
    return build_corpus(["of gold . bar of gold"])


@pytest.fixture
def tiny_index(tiny_corpus):
    return build_index(tiny_corpus)


@pytest.fixture(scope="session")
def demo_corpus():
    return load_directory(DEMO_DIR)


@pytest.fixture(scope="session")
def demo_index(demo_corpus):
    return build_index(demo_corpus)
