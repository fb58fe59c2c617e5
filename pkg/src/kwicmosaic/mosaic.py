"""Mosaic layouts and the multi-mosaic linking state.

A mosaic is one column per context position; each column stacks tiles whose
heights encode either positional frequency or collocation strength. Several
mosaics share a palette derived from the primary keyword's twenty most
frequent context words; everything else is grey. All values here are
immutable: promoting a new primary or selecting a tile returns a new state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping, Sequence

from .concordance import Concordance, ConcordanceLine, positions
from .corpus import Corpus
from .errors import NoDataError
from .stats import (
    PositionalFrequencyTable,
    collocation_strength,
    positional_frequencies,
    top_context_words,
)

# Color sentinels. Real color values live in the UI; the model only carries
# palette indices 0..19 or these markers.
GREY = "grey"
FILLER = "filler"

PALETTE_SIZE = 20


class Mode(str, Enum):
    FREQUENCY = "frequency"
    COLLOCATION_STRENGTH = "colloc"


@dataclass(frozen=True)
class MosaicTile:
    """One stacked tile. ``word`` is None for the FILLER tile that stands in
    for lines truncated at this position."""

    word: str | None
    position: int
    value: float
    height_fraction: float
    color: int | str = GREY
    selected: bool = False
    connected: bool = False


@dataclass(frozen=True)
class MosaicModel:
    keyword: str
    mode: Mode
    window: int
    line_count: int
    columns: dict[int, tuple[MosaicTile, ...]]


def layout_mosaic(
    table: PositionalFrequencyTable, corpus: Corpus, mode: Mode = Mode.FREQUENCY
) -> MosaicModel:
    """Turn a positional frequency table into value-scaled tile columns.

    FREQUENCY mode: tile height = count / line_count, plus one FILLER tile
    covering the truncated-line share so every column sums to 1.
    COLLOCATION_STRENGTH mode: tile value = positional lift, heights
    normalized by the column's strength sum; no FILLER since strengths are
    not line-partitioned.

    Within a column tiles are sorted by value descending (ties
    alphabetical) with FILLER last.
    """
    if table.line_count < 1:
        raise NoDataError(f"empty concordance for {table.keyword!r}")
    columns: dict[int, tuple[MosaicTile, ...]] = {}
    for p in positions(table.window):
        bucket = table.counts[p]
        tiles: list[MosaicTile] = []
        if mode is Mode.FREQUENCY:
            for word, count in sorted(bucket.items(), key=lambda kv: (-kv[1], kv[0])):
                tiles.append(
                    MosaicTile(
                        word=word,
                        position=p,
                        value=count,
                        height_fraction=count / table.line_count,
                    )
                )
            if table.truncated[p] > 0:
                tiles.append(
                    MosaicTile(
                        word=None,
                        position=p,
                        value=table.truncated[p],
                        height_fraction=table.truncated[p] / table.line_count,
                        color=FILLER,
                    )
                )
        else:
            scores = {
                word: collocation_strength(table, corpus, word, p).score
                for word in bucket
            }
            total = sum(scores.values())
            for word, score in sorted(scores.items(), key=lambda kv: (-kv[1], kv[0])):
                tiles.append(
                    MosaicTile(
                        word=word,
                        position=p,
                        value=score,
                        height_fraction=score / total,
                    )
                )
        columns[p] = tuple(tiles)
    return MosaicModel(
        keyword=table.keyword,
        mode=mode,
        window=table.window,
        line_count=table.line_count,
        columns=columns,
    )


@dataclass(frozen=True)
class Selection:
    keyword: str
    position: int
    word: str


@dataclass(frozen=True)
class MultiMosaicState:
    """The linked grid: keyword order (primary first), shared palette,
    colored mosaics, and the current tile selection.

    Tables and concordances ride along so promotion and selection need no
    further corpus access; they are derived data and never mutated.
    """

    primary_keyword: str
    ordered_keywords: tuple[str, ...]
    mode: Mode
    window: int
    palette: dict[str, int]
    mosaics: dict[str, MosaicModel]
    tables: dict[str, PositionalFrequencyTable]
    concordances: dict[str, Concordance]
    selection: Selection | None = None


def _palette_for(table: PositionalFrequencyTable) -> dict[str, int]:
    return {word: rank - 1 for word, rank in top_context_words(table, PALETTE_SIZE)}


def _recolor(model: MosaicModel, palette: Mapping[str, int]) -> MosaicModel:
    columns = {
        p: tuple(
            tile
            if tile.word is None
            else replace(
                tile,
                color=palette.get(tile.word, GREY),
                selected=False,
                connected=False,
            )
            for tile in tiles
        )
        for p, tiles in model.columns.items()
    }
    return replace(model, columns=columns)


def build_state(
    keywords: Sequence[str],
    concordances: Mapping[str, Concordance],
    corpus: Corpus,
    mode: Mode = Mode.FREQUENCY,
) -> MultiMosaicState:
    """Assemble the multi-mosaic grid; the first keyword is primary.

    Every keyword must have at least one concordance line; an empty one is
    rejected by name so the caller can report it.
    """
    if not keywords:
        raise ValueError("at least one keyword required")
    windows = {concordances[kw].window for kw in keywords}
    if len(windows) != 1:
        raise ValueError(f"keywords mix window sizes: {sorted(windows)}")
    for kw in keywords:
        if len(concordances[kw]) == 0:
            raise ValueError(f"keyword {kw!r} has an empty concordance")
    tables = {kw: positional_frequencies(concordances[kw]) for kw in keywords}
    palette = _palette_for(tables[keywords[0]])
    mosaics = {
        kw: _recolor(layout_mosaic(tables[kw], corpus, mode), palette)
        for kw in keywords
    }
    return MultiMosaicState(
        primary_keyword=keywords[0],
        ordered_keywords=tuple(keywords),
        mode=mode,
        window=windows.pop(),
        palette=palette,
        mosaics=mosaics,
        tables=tables,
        concordances={kw: concordances[kw] for kw in keywords},
        selection=None,
    )


def promote_primary(state: MultiMosaicState, keyword: str) -> MultiMosaicState:
    """Make ``keyword`` primary: swap it into grid position 0, rebuild the
    palette from its table, recolor every mosaic, clear the selection.

    The old primary takes the promoted mosaic's slot, so promoting twice
    restores the original grid. Tile values and per-column order are
    untouched; only colors, keyword order, and selection change.
    """
    if keyword not in state.ordered_keywords:
        raise ValueError(f"unknown keyword {keyword!r}")
    order_list = list(state.ordered_keywords)
    idx = order_list.index(keyword)
    order_list[0], order_list[idx] = order_list[idx], order_list[0]
    order = tuple(order_list)
    palette = _palette_for(state.tables[keyword])
    mosaics = {kw: _recolor(state.mosaics[kw], palette) for kw in order}
    return MultiMosaicState(
        primary_keyword=keyword,
        ordered_keywords=order,
        mode=state.mode,
        window=state.window,
        palette=palette,
        mosaics=mosaics,
        tables={kw: state.tables[kw] for kw in order},
        concordances={kw: state.concordances[kw] for kw in order},
        selection=None,
    )


def sort_concordance(conc: Concordance, position: int) -> list[ConcordanceLine]:
    """Order lines alphabetically by the word at ``position`` (PAD last).

    Ties expand outward from the keyword along the same side, then fall
    back to line_id, giving a stable total order that groups multi-word
    patterns.
    """
    if position == 0 or abs(position) > conc.window:
        raise ValueError(f"position {position} outside ±{conc.window} window")
    side = [-q for q in range(1, conc.window + 1)] if position < 0 else list(
        range(1, conc.window + 1)
    )
    key_positions = [position] + [q for q in side if q != position]

    def key(line: ConcordanceLine):
        parts = []
        for q in key_positions:
            word = line.slot(q)
            parts.append((word is None, word or ""))
        return tuple(parts) + (line.line_id,)

    return sorted(conc.lines, key=key)


def connected_words(
    conc: Concordance, position: int, word: str
) -> dict[int, frozenset[str]]:
    """Words co-occurring with the (position, word) pattern.

    Restricted to lines whose slot at ``position`` equals ``word``; for
    every other position, the set of non-PAD words those lines contain.
    """
    if position == 0 or abs(position) > conc.window:
        raise ValueError(f"position {position} outside ±{conc.window} window")
    matching = [line for line in conc.lines if line.slot(position) == word]
    if not matching:
        raise NoDataError(f"{word!r} does not occur at position {position}")
    out: dict[int, set[str]] = {}
    for q in positions(conc.window):
        if q == position:
            continue
        words = {line.slot(q) for line in matching} - {None}
        if words:
            out[q] = words
    return {q: frozenset(ws) for q, ws in out.items()}


@dataclass(frozen=True)
class ViewLine:
    line: ConcordanceLine
    match: bool
    # Context positions holding the clicked word; the UI paints these pink.
    word_positions: tuple[int, ...]


@dataclass(frozen=True)
class ConcordanceViewSpec:
    """What the textual pane shows after a tile click: the clicked keyword's
    lines sorted at the clicked position, with match flags. Style names are
    fixed: keyword column blue, matched lines cyan, clicked word pink."""

    keyword: str
    window: int
    sort_position: int
    match_word: str
    lines: tuple[ViewLine, ...]

    KEYWORD_STYLE = "blue"
    MATCH_LINE_STYLE = "cyan"
    MATCH_WORD_STYLE = "pink"


def select_tile(
    state: MultiMosaicState, keyword: str, position: int, word: str
) -> tuple[MultiMosaicState, ConcordanceViewSpec]:
    """Select a word tile: returns the new state (selection set, connected
    flags on the clicked mosaic) and the concordance view it drives.

    Statistics are untouched; only flags and the view are produced.
    """
    if keyword not in state.ordered_keywords:
        raise ValueError(f"unknown keyword {keyword!r}")
    table = state.tables[keyword]
    if position == 0 or abs(position) > table.window:
        raise ValueError(f"position {position} outside ±{table.window} window")
    if word not in table.counts[position]:
        raise ValueError(f"no tile for {word!r} at position {position}")

    conc = state.concordances[keyword]
    connected = connected_words(conc, position, word)

    mosaics = dict(state.mosaics)
    for kw in state.ordered_keywords:
        model = state.mosaics[kw]
        if kw == keyword:
            columns = {
                p: tuple(
                    tile
                    if tile.word is None
                    else replace(
                        tile,
                        selected=(tile.position == position and tile.word == word),
                        connected=tile.word in connected.get(tile.position, ()),
                    )
                    for tile in tiles
                )
                for p, tiles in model.columns.items()
            }
            mosaics[kw] = replace(model, columns=columns)
        else:
            mosaics[kw] = _clear_flags(model)

    new_state = replace(
        state, mosaics=mosaics, selection=Selection(keyword, position, word)
    )

    view_lines = tuple(
        ViewLine(
            line=line,
            match=line.slot(position) == word,
            word_positions=tuple(
                q for q in positions(conc.window) if line.slot(q) == word
            ),
        )
        for line in sort_concordance(conc, position)
    )
    view = ConcordanceViewSpec(
        keyword=keyword,
        window=conc.window,
        sort_position=position,
        match_word=word,
        lines=view_lines,
    )
    return new_state, view


def _clear_flags(model: MosaicModel) -> MosaicModel:
    columns = {
        p: tuple(
            tile
            if (not tile.selected and not tile.connected)
            else replace(tile, selected=False, connected=False)
            for tile in tiles
        )
        for p, tiles in model.columns.items()
    }
    return replace(model, columns=columns)


def tile_dict(tile: MosaicTile) -> dict:
    return {
        "word": tile.word,
        "position": tile.position,
        "value": tile.value,
        "heightFraction": tile.height_fraction,
        "color": tile.color,
        "selected": tile.selected,
        "connected": tile.connected,
    }


def mosaic_dict(model: MosaicModel) -> dict:
    return {
        "keyword": model.keyword,
        "mode": model.mode.value,
        "window": model.window,
        "lineCount": model.line_count,
        "columns": [
            {"position": p, "tiles": [tile_dict(t) for t in model.columns[p]]}
            for p in positions(model.window)
        ],
    }


def state_dict(state: MultiMosaicState) -> dict:
    return {
        "primaryKeyword": state.primary_keyword,
        "orderedKeywords": list(state.ordered_keywords),
        "mode": state.mode.value,
        "window": state.window,
        "paletteMap": dict(state.palette),
        "selection": None
        if state.selection is None
        else {
            "keyword": state.selection.keyword,
            "position": state.selection.position,
            "word": state.selection.word,
        },
        "mosaics": [mosaic_dict(state.mosaics[kw]) for kw in state.ordered_keywords],
    }


def serialize_state(state: MultiMosaicState) -> bytes:
    """Canonical byte serialization; identical states serialize identically."""
    return json.dumps(
        state_dict(state), ensure_ascii=False, separators=(",", ":")
    ).encode("utf-8")
