"""Read-only HTTP service over an indexed corpus.

Every endpoint is a pure function of (corpus, query): the corpus and index
are built once at startup and never mutated, so identical requests yield
byte-identical responses and any number of them may run concurrently.
Primary-keyword and selection state live entirely in the client.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import mosaic as mz
from .concordance import Concordance, InvertedIndex, concordance, positions
from .corpus import Corpus
from .schemas import (
    ColumnOut,
    ConcordanceResponse,
    ErrorResponse,
    FrequencyResponse,
    KeywordEntry,
    KeywordsResponse,
    LineOut,
    MosaicResponse,
    TileOut,
)
from .stats import positional_frequencies, top_context_words

DEFAULT_WINDOW = 4
DEFAULT_MIN_COUNT = 5


def _parse_mode(mode: str) -> mz.Mode:
    try:
        return mz.Mode(mode)
    except ValueError:
        raise HTTPException(
            status_code=400,
            detail=f"unknown mode {mode!r}; expected 'frequency' or 'colloc'",
        )


def create_app(
    corpus: Corpus,
    index: InvertedIndex,
    min_count: int = DEFAULT_MIN_COUNT,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="kwicmosaic", docs_url=None, redoc_url=None)

    @app.exception_handler(HTTPException)
    async def _error_body(request: Request, exc: HTTPException) -> JSONResponse:
        return JSONResponse(
            status_code=exc.status_code,
            content=ErrorResponse(error=str(exc.detail)).model_dump(),
        )

    def get_concordance(keyword: str, window: int) -> Concordance:
        if window < 1:
            raise HTTPException(status_code=400, detail="window must be >= 1")
        if keyword not in index:
            raise HTTPException(
                status_code=404, detail=f"unknown keyword {keyword!r}"
            )
        return concordance(corpus, index, keyword, window)

    @app.get("/api/keywords", response_model=KeywordsResponse)
    def keywords() -> KeywordsResponse:
        entries = sorted(
            (
                (word, count)
                for word, count in corpus.frequency_table.items()
                if count >= min_count
            ),
            key=lambda wc: (-wc[1], wc[0]),
        )
        return KeywordsResponse(
            keywords=[KeywordEntry(word=w, count=c) for w, c in entries]
        )

    @app.get("/api/mosaic/{keyword}", response_model=MosaicResponse)
    def mosaic(
        keyword: str,
        mode: str = Query("frequency"),
        window: int = Query(DEFAULT_WINDOW),
    ) -> MosaicResponse:
        conc = get_concordance(keyword, window)
        table = positional_frequencies(conc)
        model = mz.layout_mosaic(table, corpus, _parse_mode(mode))
        return MosaicResponse(
            keyword=keyword,
            mode=model.mode.value,
            window=window,
            lineCount=model.line_count,
            topContext=[w for w, _ in top_context_words(table, mz.PALETTE_SIZE)],
            columns=[
                ColumnOut(
                    position=p,
                    tiles=[
                        TileOut(
                            word=t.word,
                            position=t.position,
                            value=t.value,
                            heightFraction=t.height_fraction,
                            color=t.color,
                        )
                        for t in model.columns[p]
                    ],
                )
                for p in positions(window)
            ],
        )

    @app.get("/api/concordance/{keyword}", response_model=ConcordanceResponse)
    def concordance_view(
        keyword: str,
        sortPos: int | None = Query(None),
        matchWord: str | None = Query(None),
        mode: str | None = Query(None),
        window: int = Query(DEFAULT_WINDOW),
    ) -> ConcordanceResponse:
        if mode is not None:
            # lines are mode-independent; validate so typos surface as 400s
            _parse_mode(mode)
        conc = get_concordance(keyword, window)
        if sortPos is not None and (sortPos == 0 or abs(sortPos) > window):
            raise HTTPException(
                status_code=400,
                detail=f"sortPos {sortPos} outside ±{window} window",
            )
        if matchWord is not None and sortPos is None:
            raise HTTPException(
                status_code=400, detail="matchWord requires sortPos"
            )

        lines = mz.sort_concordance(conc, sortPos) if sortPos is not None else list(
            conc.lines
        )
        connected = None
        if matchWord is not None:
            if not any(line.slot(sortPos) == matchWord for line in conc.lines):
                raise HTTPException(
                    status_code=404,
                    detail=f"{matchWord!r} does not occur at position {sortPos}",
                )
            connected = {
                str(q): sorted(words)
                for q, words in mz.connected_words(conc, sortPos, matchWord).items()
            }

        out_lines = [
            LineOut(
                lineId=line.line_id,
                left=list(line.left),
                right=list(line.right),
                match=(
                    matchWord is not None and line.slot(sortPos) == matchWord
                ),
                wordPositions=[]
                if matchWord is None
                else [q for q in positions(window) if line.slot(q) == matchWord],
            )
            for line in lines
        ]
        return ConcordanceResponse(
            keyword=keyword,
            window=window,
            total=len(conc),
            sortPos=sortPos,
            matchWord=matchWord,
            lines=out_lines,
            connected=connected,
        )

    @app.get("/api/corpus/frequency/{word}", response_model=FrequencyResponse)
    def frequency(word: str) -> FrequencyResponse:
        return FrequencyResponse(word=word, frequency=corpus.frequency(word))

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
