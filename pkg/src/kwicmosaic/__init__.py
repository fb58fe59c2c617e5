"""kwicmosaic: concordancing engine with positional collocation statistics,
mosaic layout models for linked keyword grids, and a read-only HTTP API."""

from .concordance import (
    PAD,
    Concordance,
    ConcordanceLine,
    InvertedIndex,
    build_index,
    concordance,
    line_text,
)
from .corpus import (
    Corpus,
    TokenizerConfig,
    build_corpus,
    corpus_frequency,
    load_directory,
    tokenize,
)
from .errors import (
    IngestError,
    KwicFileError,
    KwicMosaicError,
    KwicParseError,
    KwicValidationError,
    NoDataError,
)
from .kwicfile import export_kwic, import_kwic, structurally_equal
from .mosaic import (
    FILLER,
    GREY,
    ConcordanceViewSpec,
    Mode,
    MosaicModel,
    MosaicTile,
    MultiMosaicState,
    Selection,
    build_state,
    connected_words,
    layout_mosaic,
    promote_primary,
    select_tile,
    serialize_state,
    sort_concordance,
)
from .stats import (
    CollocationScore,
    PositionalFrequencyTable,
    collocation_strength,
    most_frequent_at,
    positional_frequencies,
    top_context_words,
)
from .storage import load_index, save_index

__version__ = "0.1.0"

__all__ = [
    "PAD",
    "FILLER",
    "GREY",
    "Concordance",
    "ConcordanceLine",
    "ConcordanceViewSpec",
    "CollocationScore",
    "Corpus",
    "IngestError",
    "InvertedIndex",
    "KwicFileError",
    "KwicMosaicError",
    "KwicParseError",
    "KwicValidationError",
    "Mode",
    "MosaicModel",
    "MosaicTile",
    "MultiMosaicState",
    "NoDataError",
    "PositionalFrequencyTable",
    "Selection",
    "TokenizerConfig",
    "build_corpus",
    "build_index",
    "build_state",
    "collocation_strength",
    "concordance",
    "connected_words",
    "corpus_frequency",
    "export_kwic",
    "import_kwic",
    "layout_mosaic",
    "line_text",
    "load_directory",
    "load_index",
    "most_frequent_at",
    "positional_frequencies",
    "promote_primary",
    "save_index",
    "select_tile",
    "serialize_state",
    "sort_concordance",
    "structurally_equal",
    "tokenize",
    "top_context_words",
]
