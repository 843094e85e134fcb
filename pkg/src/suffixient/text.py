"""Loading raw bytes into a sentinel-terminated, rank-densified text.

Positions are 1-based everywhere a caller can see them; the numpy arrays
underneath are ordinary 0-based storage, so ``symbols[k - 1]`` is ``T[k]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyInput, MalformedInput, SentinelViolation, UnaryAlphabet

SENTINEL = 0


@dataclass(frozen=True, eq=False)
class Text:
    """A text ``T[1..n]`` over ranks ``0..sigma-1`` ending in the sentinel rank 0."""

    symbols: np.ndarray
    sigma: int
    rank_to_byte: bytes

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.sigma == other.sigma
            and self.rank_to_byte == other.rank_to_byte
            and np.array_equal(self.symbols, other.symbols)
        )

    __hash__ = None

    @property
    def n(self) -> int:
        return int(self.symbols.shape[0])

    def __len__(self) -> int:
        return self.n

    def as_bytes(self) -> bytes:
        """Rank sequence as a bytes object (cheap slicing for the oracles)."""
        return self.symbols.tobytes()

    def decode(self) -> bytes:
        """Map ranks back to the source bytes, sentinel included."""
        table = np.frombuffer(self.rank_to_byte, dtype=np.uint8)
        return table[self.symbols].tobytes()

    def label(self, rank: int) -> str:
        if rank == SENTINEL:
            return "$"
        b = self.rank_to_byte[rank]
        return chr(b) if 32 < b < 127 else f"\\x{b:02x}"


@dataclass(frozen=True, eq=False)
class ReversedText(Text):
    """``T^rev``: the body of ``T`` reversed, sentinel kept at position n."""


def _densify(arr: np.ndarray) -> tuple[np.ndarray, bytes]:
    present = np.bincount(arr, minlength=256) > 0
    lut = (np.cumsum(present) - 1).astype(np.uint8)
    return lut[arr], np.flatnonzero(present).astype(np.uint8).tobytes()


def load_text(raw: bytes, sentinel_policy: str = "append") -> Text:
    """Build a :class:`Text` from raw bytes.

    With ``append`` a 0x00 byte is appended as the sentinel and must not
    occur in ``raw``. With ``require`` the last byte of ``raw`` is the
    sentinel and has to be strictly smaller than every other byte.
    """
    if len(raw) == 0:
        raise EmptyInput("input is empty")
    arr = np.frombuffer(bytes(raw), dtype=np.uint8)
    if sentinel_policy == "append":
        if (arr == 0).any():
            first = int(np.flatnonzero(arr == 0)[0])
            raise SentinelViolation(f"byte 0x00 at offset {first} collides with the appended sentinel")
        arr = np.append(arr, np.uint8(0))
    elif sentinel_policy == "require":
        last = arr[-1]
        if arr.shape[0] > 1 and (arr[:-1] <= last).any():
            raise SentinelViolation(
                f"terminator 0x{int(last):02x} is not unique and strictly smallest"
            )
    else:
        raise ValueError(f"unknown sentinel policy {sentinel_policy!r}")

    symbols, rank_to_byte = _densify(arr)
    sigma = len(rank_to_byte)
    if sigma < 2:
        raise UnaryAlphabet("text needs at least one symbol besides the sentinel")
    symbols.setflags(write=False)
    return Text(symbols, sigma, rank_to_byte)


def text_from_ranks(ranks, sigma: int | None = None) -> Text:
    """Wrap an already-dense rank sequence (sentinel included) as a Text.

    Handy for generated test texts; ``rank_to_byte`` maps rank r to byte
    ``ord('a') + r - 1`` and the sentinel to 0x00.
    """
    symbols = np.asarray(ranks, dtype=np.uint8).copy()
    if symbols.shape[0] == 0:
        raise EmptyInput("input is empty")
    if symbols[-1] != SENTINEL or (symbols[:-1] == SENTINEL).any():
        raise SentinelViolation("rank 0 must occur exactly once, at the end")
    if sigma is None:
        sigma = int(symbols.max()) + 1
    if set(np.unique(symbols).tolist()) != set(range(sigma)):
        raise ValueError("ranks are not dense")
    if sigma < 2:
        raise UnaryAlphabet("text needs at least one symbol besides the sentinel")
    symbols.setflags(write=False)
    table = bytes([0] + [(ord("a") + r - 1) % 256 for r in range(1, sigma)])
    return Text(symbols, sigma, table)


def reverse_text(t: Text) -> Text:
    """``T^rev[i] = T[n - i]`` for ``i < n`` and ``T^rev[n] = $``.

    The map is an involution: reversing a :class:`ReversedText` gives back
    a plain :class:`Text`.
    """
    symbols = np.empty_like(t.symbols)
    symbols[:-1] = t.symbols[-2::-1]
    symbols[-1] = SENTINEL
    symbols.setflags(write=False)
    cls = Text if isinstance(t, ReversedText) else ReversedText
    return cls(symbols, t.sigma, t.rank_to_byte)


def parse_fasta(data: bytes) -> bytes:
    """Concatenate the sequence lines of every record."""
    if not data.startswith(b">"):
        raise MalformedInput("FASTA input must start with '>'")
    parts = []
    for line in data.splitlines():
        if line.startswith(b">") or line.startswith(b";"):
            continue
        parts.append(line.strip())
    seq = b"".join(parts)
    if b"\x00" in seq:
        raise SentinelViolation("FASTA record contains byte 0x00")
    return seq


def read_input(path: str | Path, fmt: str = "raw") -> bytes:
    data = Path(path).read_bytes()
    if fmt == "fasta":
        return parse_fasta(data)
    if fmt != "raw":
        raise ValueError(f"unknown input format {fmt!r}")
    return data
