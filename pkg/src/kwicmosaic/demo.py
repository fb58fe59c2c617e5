"""Deterministic demo corpus: an ancient-trade narrative with planted
collocation structure around the keywords gold, iron, bronze and silver.

Planted relations (exact by construction, for any seed):
  * "of" is the most frequent word directly left of "gold" (55 of 63 lines)
  * at silver-2 the top word is "gold" (30) and the runner-up "talents" (20)
  * "talents" never occurs within 4 tokens of "gold", so it cannot enter
    gold's most-frequent context words

Every keyword sits at least 4 tokens from both ends of its sentence, so
context windows never cross sentence joins and the planted counts are
independent of how sentences are shuffled into documents.
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

DEFAULT_SEED = 7
DOC_COUNT = 12

_GOLD_SILVER = (
    "the {agent} weighed {adj} bars of gold and silver in the {place} market"
)
_GOLD_VESSEL = "the {agent2} carried heavy {vessel} of gold into the {adj2} temple"
_GOLD_PLAIN = "the old king prized the {goldadj} gold above every other treasure"
_SILVER_TALENTS = "the king sent {num} talents of silver to the city of {city}"
_SILVER_PIECES = "the traders counted thirty pieces of silver upon the wooden table"
_SILVER_CROWN = "the queen wore her bright crown of silver at the {adj} feast"
_IRON_SWORDS = "the soldiers carried sharp swords of iron into the northern battle"
_IRON_TOOLS = "the smith forged strong tools of iron beside the glowing furnace"
_BRONZE_SHIELDS = "the workers cast great shields of bronze for the temple gates"
_BRONZE_STATUES = "the city raised tall statues of bronze along the harbor wall"

_FILLER = [
    "the caravan crossed the burning desert toward the western mountains",
    "the harvest filled every granary before the early winter rains",
    "the scribes recorded each tribute upon tablets of soft clay",
    "the ships sailed past the islands carrying wine and dark oil",
    "the shepherds drove their flocks down from the summer pastures",
    "the builders raised the palace walls higher than the old ramparts",
    "the festival lasted seven days with music in every street",
    "the messengers rode north along the river road at dawn",
]

_AGENTS = ["merchants", "traders", "envoys"]
_ADJS = ["heavy", "solid", "gleaming"]
_PLACES = ["great", "busy", "southern"]
_AGENTS2 = ["priests", "servants", "stewards"]
_VESSELS = ["crowns", "cups", "rings", "shields", "plates"]
_ADJS2 = ["high", "old", "inner"]
_GOLD_ADJS = ["pure", "fine", "red", "pale"]
_NUMS = ["ten", "twenty", "forty", "sixty"]
_CITIES = ["babylon", "tyre", "nineveh", "susa"]
_FEAST_ADJS = ["great", "spring", "royal"]


def demo_sentences(seed: int = DEFAULT_SEED) -> list[str]:
    rng = random.Random(seed)
    sentences: list[str] = []

    for _ in range(30):
        sentences.append(
            _GOLD_SILVER.format(
                agent=rng.choice(_AGENTS),
                adj=rng.choice(_ADJS),
                place=rng.choice(_PLACES),
            )
        )
    for vessel in _VESSELS:
        for _ in range(5):
            sentences.append(
                _GOLD_VESSEL.format(
                    agent2=rng.choice(_AGENTS2),
                    vessel=vessel,
                    adj2=rng.choice(_ADJS2),
                )
            )
    for _ in range(8):
        sentences.append(_GOLD_PLAIN.format(goldadj=rng.choice(_GOLD_ADJS)))
    for _ in range(20):
        sentences.append(
            _SILVER_TALENTS.format(num=rng.choice(_NUMS), city=rng.choice(_CITIES))
        )
    for _ in range(8):
        sentences.append(_SILVER_PIECES)
    for _ in range(6):
        sentences.append(_SILVER_CROWN.format(adj=rng.choice(_FEAST_ADJS)))
    for _ in range(12):
        sentences.append(_IRON_SWORDS)
    for _ in range(8):
        sentences.append(_IRON_TOOLS)
    for _ in range(10):
        sentences.append(_BRONZE_SHIELDS)
    for _ in range(8):
        sentences.append(_BRONZE_STATUES)
    for _ in range(40):
        sentences.append(rng.choice(_FILLER))

    rng.shuffle(sentences)
    return sentences


def demo_documents(seed: int = DEFAULT_SEED) -> list[str]:
    """The corpus as raw document strings, sentences joined with periods."""
    sentences = demo_sentences(seed)
    per_doc = (len(sentences) + DOC_COUNT - 1) // DOC_COUNT
    return [
        ". ".join(sentences[i : i + per_doc]) + "."
        for i in range(0, len(sentences), per_doc)
    ]


def write_demo_corpus(out_dir: str | Path, seed: int = DEFAULT_SEED) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, text in enumerate(demo_documents(seed)):
        path = out / f"doc{i:02d}.txt"
        path.write_text(text + "\n", encoding="utf-8")
        paths.append(path)
    return paths


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        description="write the demo corpus as plain-text documents"
    )
    parser.add_argument("out_dir", help="directory to write documents into")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args(argv)
    paths = write_demo_corpus(args.out_dir, args.seed)
    print(f"wrote {len(paths)} documents to {args.out_dir}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
