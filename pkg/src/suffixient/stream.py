"""One-pass access to (SA, LCP, BWT) with a single step of look-ahead.

``TripleStream`` is an enforcement boundary rather than a plain iterator:
only the triples at ``cursor`` and ``cursor + 1`` are readable, the cursor
moves forward one step at a time, and the virtual column ``n + 1`` carries
``lcp = bwt = -1`` so consumers need no end-of-input special case.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import AccessViolation, Exhausted
from .index import IndexArrays


class IndexTriple(NamedTuple):
    i: int
    sa: int
    lcp: int
    bwt: int


class TripleStream:
    def __init__(self, arrays: IndexArrays):
        self._arrays = arrays
        self.n = arrays.n
        self.sigma = arrays.sigma
        self.cursor = 1
        self.advances = 0

    def _materialize(self, index: int) -> IndexTriple:
        if index == self.n + 1:
            return IndexTriple(index, 0, -1, -1)
        a = self._arrays
        k = index - 1
        return IndexTriple(index, int(a.sa[k]), int(a.lcp[k]), int(a.bwt[k]))

    def read(self, index: int) -> IndexTriple:
        """Read any index inside the window; everything else is a violation."""
        if self.cursor > self.n:
            raise Exhausted("stream exhausted")
        if index not in (self.cursor, self.cursor + 1):
            raise AccessViolation(
                f"index {index} is outside the window [{self.cursor}, {self.cursor + 1}]"
            )
        return self._materialize(index)

    def current(self) -> IndexTriple:
        return self.read(self.cursor)

    def peek_next(self) -> IndexTriple:
        return self.read(self.cursor + 1)

    def advance(self) -> None:
        if self.cursor > self.n:
            raise Exhausted("cannot advance past n + 1")
        self.cursor += 1
        self.advances += 1

    @property
    def exhausted(self) -> bool:
        return self.cursor > self.n


class AuditingStream(TripleStream):
    """Strict double that also records how often each column is materialized."""

    def __init__(self, arrays: IndexArrays):
        super().__init__(arrays)
        self.materialized = [0] * (arrays.n + 2)

    def _materialize(self, index: int) -> IndexTriple:
        self.materialized[index] += 1
        return super()._materialize(index)

    @property
    def max_materializations(self) -> int:
        return max(self.materialized[1:])
