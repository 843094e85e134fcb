"""Shared test data: the worked example, transcribed cell by cell, and the
seeded suite used by the acceptance criteria."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass
from functools import cached_property

from suffixient.index import IndexArrays
from suffixient.oracle import Oracle, suffix_tree_height
from suffixient.pipeline import index_text
from suffixient.text import Text, reverse_text
from suffixient.textgen import text_suite

GOLDEN_RAW = b"AGCACAGCA"

# Execution trace for AGCACAGCA$, columns i = 1..10.
TABLE = {
    "T": "AGCACAGCA$",
    "T_rev": "ACGACACGA$",
    "LCP": [-1, 0, 1, 2, 4, 0, 1, 3, 0, 2],
    "BWT": "AGGC$AAACC",
    "w": [0, 0, 2, 4, 4, 0, -1, 0, 0, -1],
    "SA": [10, 9, 4, 6, 1, 5, 7, 2, 8, 3],
    "p_text": [1, 2, 7, 5, 10, 6, 4, 9, 3, 8],
    "lcp_eq_w": "FTFFTTFFTF",
    "curr_b": [1, 1, 3, 4, 4, 1, 6, 1, 1, 9],
    "weighted": "TTTTTTFTTF",
    "candt": ["T", "T", "T", "T", "T", "F", "N/A", "F", "F", "N/A"],
    "rowList": [
        ["(1,A,0)"],
        ["(2,G,0)", "(1,A,0)"],
        ["(7,G,2)", "(1,A,0)"],
        ["(5,C,4)", "(7,G,2)", "(1,A,0)"],
        ["(10,$,4)", "(5,C,4)", "(7,G,2)", "(1,A,0)"],
        ["(1,A,0)"],
        ["(1,A,0)"],
        ["(1,A,0)"],
        ["(1,A,0)"],
        ["(1,A,0)"],
    ],
    # columns 1..10 and n+1, exactly as printed
    "result": {
        "$": ["", "", "", "", "10", "10", "10", "10", "10", "10", "10"],
        "A": ["", "", "", "", "", "", "", "", "", "", "1"],
        "C": ["", "", "", "", "5", "5", "5", "5", "5", "5", "5"],
        "G": ["", "", "", "", "7", "7", "7", "7", "7", "7", "7"],
    },
    "output": [10, 1, 5, 7],
}

SUITE_SEED = 20240601
SMALL_SEED = 777


@dataclass
class Case:
    name: str
    text: Text

    @cached_property
    def arrays(self) -> IndexArrays:
        return index_text(self.text)

    @cached_property
    def oracle(self) -> Oracle:
        return Oracle(self.text)

    @cached_property
    def height(self) -> int:
        return suffix_tree_height(reverse_text(self.text))


def make_suite() -> list[Case]:
    """1000 texts with n in [2, 300] plus 300 short ones (n <= 14, sigma <= 4)."""
    big = text_suite(1000, SUITE_SEED, n_range=(2, 300), sigma_range=(2, 8))
    small = text_suite(300, SMALL_SEED, n_range=(2, 14), sigma_range=(2, 4))
    return [Case(name, t) for name, t in big + small]


ACCEPTANCE_LINES: list[str] = []


@contextmanager
def criterion(label: str, limit_s: float | None = None):
    """Record one PASS/FAIL line for the acceptance summary."""
    start = time.perf_counter()
    notes: list[str] = []
    try:
        yield notes
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL {label}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
        raise
    elapsed = time.perf_counter() - start
    if limit_s is not None and elapsed >= limit_s:
        ACCEPTANCE_LINES.append(f"FAIL {label}: {elapsed:.2f}s exceeds {limit_s}s")
        raise AssertionError(f"{label} took {elapsed:.2f}s, limit {limit_s}s")
    budget = f" (limit {limit_s}s)" if limit_s is not None else ""
    extra = "; " + "; ".join(notes) if notes else ""
    ACCEPTANCE_LINES.append(f"PASS {label}  [{elapsed:.2f}s{budget}{extra}]")
