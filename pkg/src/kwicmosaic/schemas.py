"""Pydantic models for the HTTP API. Field names match the wire format."""

from __future__ import annotations

from pydantic import BaseModel


class KeywordEntry(BaseModel):
    word: str
    count: int


class KeywordsResponse(BaseModel):
    keywords: list[KeywordEntry]


class TileOut(BaseModel):
    word: str | None
    position: int
    value: float
    heightFraction: float
    color: int | str
    selected: bool = False
    connected: bool = False


class ColumnOut(BaseModel):
    position: int
    tiles: list[TileOut]


class MosaicResponse(BaseModel):
    keyword: str
    mode: str
    window: int
    lineCount: int
    # Ranked most-frequent context words of this keyword; the client builds
    # the shared palette from the primary mosaic's list.
    topContext: list[str]
    columns: list[ColumnOut]


class LineOut(BaseModel):
    lineId: int
    left: list[str | None]
    right: list[str | None]
    match: bool = False
    # Positions where the match word occurs in this line (painted pink).
    wordPositions: list[int] = []


class ConcordanceResponse(BaseModel):
    keyword: str
    window: int
    total: int
    sortPos: int | None = None
    matchWord: str | None = None
    lines: list[LineOut]
    # position (as string key) -> words connected to the matched pattern
    connected: dict[str, list[str]] | None = None


class FrequencyResponse(BaseModel):
    word: str
    frequency: int


class ErrorResponse(BaseModel):
    error: str
