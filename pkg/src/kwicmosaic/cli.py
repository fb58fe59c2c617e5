"""Command-line interface.

Thin wrappers over the library: every command parses arguments, calls into
the engine, and prints. Exit status is 0 on success, 1 with a one-line
diagnostic on stderr otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .concordance import build_index, concordance
from .corpus import TokenizerConfig, load_directory
from .errors import KwicMosaicError
from .kwicfile import export_kwic
from .mosaic import Mode, layout_mosaic, mosaic_dict
from .stats import most_frequent_at, positional_frequencies
from .storage import load_index, save_index

DEFAULT_WINDOW = 4
DEFAULT_PORT = 8000


def _str2bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kwicmosaic",
        description="concordance engine: indexing, KWIC export, mosaic "
        "statistics, and the HTTP service",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="tokenize a directory of text files")
    p_index.add_argument("directory", help="directory of UTF-8 text documents")
    p_index.add_argument("--out", required=True, help="index file to write")
    p_index.add_argument(
        "--lowercase", type=_str2bool, default=True, help="case-fold tokens"
    )

    p_kwic = sub.add_parser("kwic", help="export a keyword's concordance as JSON")
    p_kwic.add_argument("--index", required=True, help="index file")
    p_kwic.add_argument("--keyword", required=True)
    p_kwic.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p_kwic.add_argument("--out", required=True, help="KWIC file to write")

    p_mosaic = sub.add_parser("mosaic", help="print a mosaic layout as JSON")
    p_mosaic.add_argument("--index", required=True, help="index file")
    p_mosaic.add_argument("--keyword", required=True)
    p_mosaic.add_argument(
        "--mode", choices=[m.value for m in Mode], default=Mode.FREQUENCY.value
    )
    p_mosaic.add_argument("--window", type=int, default=DEFAULT_WINDOW)

    p_top = sub.add_parser("top", help="most frequent word at a position")
    p_top.add_argument("--index", required=True, help="index file")
    p_top.add_argument("--keyword", required=True)
    p_top.add_argument("--position", type=int, required=True)
    p_top.add_argument("--window", type=int, default=DEFAULT_WINDOW)

    p_serve = sub.add_parser("serve", help="run the read-only HTTP service")
    p_serve.add_argument("--index", required=True, help="index file")
    p_serve.add_argument("--port", type=int, default=DEFAULT_PORT)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", help="directory of UI assets to serve")
    p_serve.add_argument(
        "--min-count",
        type=int,
        default=5,
        help="minimum corpus frequency for /api/keywords",
    )
    return parser


def _cmd_index(args: argparse.Namespace) -> int:
    corpus = load_directory(args.directory, TokenizerConfig(lowercase=args.lowercase))
    save_index(corpus, args.out)
    print(
        f"indexed {len(corpus.documents)} documents, "
        f"{corpus.total_tokens} tokens -> {args.out}"
    )
    return 0


def _load(path: str):
    if not Path(path).exists():
        raise KwicMosaicError(f"index file not found: {path}")
    return load_index(path)


def _cmd_kwic(args: argparse.Namespace) -> int:
    corpus, index = _load(args.index)
    conc = concordance(corpus, index, args.keyword, args.window)
    if len(conc) == 0:
        raise KwicMosaicError(f"keyword {args.keyword!r} not found in corpus")
    export_kwic(conc, corpus, args.out)
    print(f"wrote {len(conc)} lines for {args.keyword!r} -> {args.out}")
    return 0


def _cmd_mosaic(args: argparse.Namespace) -> int:
    corpus, index = _load(args.index)
    conc = concordance(corpus, index, args.keyword, args.window)
    if len(conc) == 0:
        raise KwicMosaicError(f"keyword {args.keyword!r} not found in corpus")
    model = layout_mosaic(positional_frequencies(conc), corpus, Mode(args.mode))
    print(json.dumps(mosaic_dict(model), ensure_ascii=False, indent=2))
    return 0


def _cmd_top(args: argparse.Namespace) -> int:
    corpus, index = _load(args.index)
    conc = concordance(corpus, index, args.keyword, args.window)
    if len(conc) == 0:
        raise KwicMosaicError(f"keyword {args.keyword!r} not found in corpus")
    print(most_frequent_at(positional_frequencies(conc), args.position))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    corpus, index = _load(args.index)
    port = int(os.environ.get("MOSAIC_PORT", args.port))
    app = create_app(
        corpus, index, min_count=args.min_count, static_dir=args.static
    )
    uvicorn.run(app, host=args.host, port=port)
    return 0


_COMMANDS = {
    "index": _cmd_index,
    "kwic": _cmd_kwic,
    "mosaic": _cmd_mosaic,
    "top": _cmd_top,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (KwicMosaicError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
