"""Exception types shared across the package."""


class KwicMosaicError(Exception):
    """Base class for all engine errors."""


class IngestError(KwicMosaicError):
    """Raised when raw text cannot be ingested (bad encoding, missing files)."""


class NoDataError(KwicMosaicError):
    """Raised when a statistic is requested for an empty position or concordance."""


class KwicFileError(KwicMosaicError):
    """Base class for KWIC/index file problems."""


class KwicParseError(KwicFileError):
    """File is not valid JSON; message carries the byte position."""


class KwicValidationError(KwicFileError):
    """File parsed but violates the schema; message names the offending field."""
