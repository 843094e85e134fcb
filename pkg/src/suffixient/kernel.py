"""Per-index primitives: the weight w(i) and the previous-smaller index b(i)."""
from __future__ import annotations

from typing import NamedTuple

from .errors import ContractViolation


def compute_w(pre_bwt: int, curr_bwt: int, next_bwt: int, curr_lcp: int, next_lcp: int) -> int:
    """Weight of index i from the BWT/LCP values at i-1, i, i+1.

    ``pre_bwt`` is -1 at i = 1 and ``next_bwt`` is -1 at i = n; a
    non-boundary index gets -1.
    """
    is_start = pre_bwt != -1 and curr_bwt != pre_bwt
    is_end = next_bwt != -1 and curr_bwt != next_bwt
    w_start = curr_lcp if is_start else -1
    w_end = next_lcp if is_end else -1
    return max(w_start, w_end)


class StackTuple(NamedTuple):
    index: int
    val: int
    b_val: int


class MonotoneStack:
    """Stack of (index, LCP[index], b(index)) with strictly increasing val.

    ``compute_b`` must be called with non-decreasing indices. A repeated
    query for the index on top returns the cached value without touching
    the stack, which lets the builder ask for b(i + 1) during iteration i.
    """

    def __init__(self):
        self.tuples: list[StackTuple] = [StackTuple(1, -1, -1)]
        self.pushes = 1
        self.pops = 0
        self.max_depth = 1
        self.repeat_hits = 0

    def __len__(self) -> int:
        return len(self.tuples)

    @property
    def top(self) -> StackTuple:
        return self.tuples[-1]

    def compute_b(self, lcp_i: int, i: int) -> int:
        tuples = self.tuples
        top = tuples[-1]
        if top.index == i:
            self.repeat_hits += 1
            return top.b_val
        if i < top.index:
            raise ContractViolation(f"b({i}) requested after b({top.index})")
        while top.val >= lcp_i:
            tuples.pop()
            self.pops += 1
            if not tuples:
                raise ContractViolation(f"LCP value {lcp_i} at index {i} popped the bottom sentinel")
            top = tuples[-1]
        tuples.append(StackTuple(i, lcp_i, top.index))
        self.pushes += 1
        if len(tuples) > self.max_depth:
            self.max_depth = len(tuples)
        return top.index


def stack_init() -> MonotoneStack:
    return MonotoneStack()


def compute_b(stack: MonotoneStack, lcp_i: int, i: int) -> int:
    return stack.compute_b(lcp_i, i)
