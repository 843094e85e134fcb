"""Text in, suffixient array out."""
from __future__ import annotations

from .builder import BuildResult, build_suffixient
from .fast import build_from_arrays_fast
from .index import IndexArrays, build_index
from .stream import TripleStream
from .text import Text, load_text, reverse_text

ENGINES = ("fast", "reference")


def index_text(text: Text) -> IndexArrays:
    """SA, LCP and BWT of the reversed text."""
    return build_index(reverse_text(text))


def build_from_arrays(arrays: IndexArrays, engine: str = "fast", check: bool = False) -> BuildResult:
    if engine == "fast":
        return build_from_arrays_fast(arrays)
    if engine == "reference":
        return build_suffixient(TripleStream(arrays), check=check)
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def suffixient_array(text: Text | bytes | str, engine: str = "fast", check: bool = False) -> BuildResult:
    """Build the suffixient array of ``text``.

    ``bytes``/``str`` input gets a 0x00 sentinel appended; pass a
    :class:`Text` to control the sentinel yourself.
    """
    if isinstance(text, str):
        text = text.encode()
    if isinstance(text, (bytes, bytearray)):
        text = load_text(bytes(text))
    return build_from_arrays(index_text(text), engine=engine, check=check)
