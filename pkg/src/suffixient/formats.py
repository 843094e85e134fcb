"""Serialized forms of a suffixient array: text, JSON document, binary."""
from __future__ import annotations

import json
import struct
from typing import Optional

from .builder import RunStats, SuffixientArray
from .text import Text

MAGIC = b"SFXA"
_HEADER = struct.Struct("<4sQQQ")


def to_text(array: SuffixientArray, zero_based: bool = False) -> str:
    shift = 1 if zero_based else 0
    return "".join(f"{p - shift}\n" for p in array.positions)


def to_document(array: SuffixientArray, text: Text, stats: Optional[RunStats] = None,
                zero_based: bool = False) -> dict:
    shift = 1 if zero_based else 0
    doc = {
        "n": array.n,
        "sigma": array.sigma,
        "chi": array.chi,
        "index_base": 0 if zero_based else 1,
        "positions": [p - shift for p in array.positions],
        "per_char_groups": [
            {
                "symbol": text.label(c),
                "byte": text.rank_to_byte[c],
                "positions": [p - shift for p in group],
            }
            for c, group in enumerate(array.groups)
        ],
    }
    if stats is not None:
        doc["stats"] = stats.as_dict()
    return doc


def to_json(array: SuffixientArray, text: Text, stats: Optional[RunStats] = None,
            zero_based: bool = False) -> str:
    return json.dumps(to_document(array, text, stats, zero_based), indent=2) + "\n"


def to_binary(array: SuffixientArray, zero_based: bool = False) -> bytes:
    """``SFXA`` magic, then n, sigma, chi and the positions as little-endian u64."""
    shift = 1 if zero_based else 0
    positions = [p - shift for p in array.positions]
    return _HEADER.pack(MAGIC, array.n, array.sigma, len(positions)) + struct.pack(
        f"<{len(positions)}Q", *positions
    )


def from_binary(data: bytes) -> tuple[int, int, list[int]]:
    """Inverse of :func:`to_binary`: ``(n, sigma, positions)``."""
    magic, n, sigma, chi = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ValueError(f"bad magic {magic!r}")
    positions = list(struct.unpack_from(f"<{chi}Q", data, _HEADER.size))
    return n, sigma, positions
