"""Column-by-column execution trace of the reference builder.

``curr_b`` is reported after the possible rebinding to b(i + 1), and the
``rows`` / ``results`` cells show the state at the end of iteration i. The
extra column ``n + 1`` holds the result lists after the final flush.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .builder import IterationRecord, build_suffixient
from .errors import SizeLimit
from .index import build_index
from .stream import TripleStream
from .text import Text, reverse_text

TRACE_CAP = 64


@dataclass
class TraceColumn:
    i: int
    t_char: Optional[int]
    rev_char: Optional[int]
    lcp: Optional[int]
    bwt: Optional[int]
    w: Optional[int]
    sa: Optional[int]
    p_text: Optional[int]
    curr_b: Optional[int]
    verdict: Optional[bool]
    rows: tuple
    results: tuple

    @property
    def lcp_equals_w(self) -> Optional[bool]:
        return None if self.w is None else self.lcp == self.w

    @property
    def weighted(self) -> Optional[bool]:
        return None if self.w is None else self.w > -1


def trace(t: Text, cap: int = TRACE_CAP) -> list[TraceColumn]:
    if t.n > cap:
        raise SizeLimit(f"trace is limited to n <= {cap}, got n = {t.n}")
    rev = reverse_text(t)
    records: list[IterationRecord] = []
    build_suffixient(TripleStream(build_index(rev)), check=True, observer=records.append)
    cols = []
    for rec in records:
        if rec.triple is None:
            cols.append(TraceColumn(rec.i, None, None, None, None, None, None, None, None, None,
                                    rec.rows, rec.results))
            continue
        k = rec.i - 1
        tr, st = rec.triple, rec.step
        cols.append(TraceColumn(
            i=rec.i,
            t_char=int(t.symbols[k]),
            rev_char=int(rev.symbols[k]),
            lcp=tr.lcp,
            bwt=tr.bwt,
            w=st.w,
            sa=tr.sa,
            p_text=t.n - tr.sa + 1,
            curr_b=st.curr_b,
            verdict=st.verdict,
            rows=rec.rows,
            results=rec.results,
        ))
    return cols


def _flag(v: Optional[bool]) -> str:
    return "N/A" if v is None else ("T" if v else "F")


def format_trace(t: Text, cols: list[TraceColumn]) -> str:
    """Render the trace as a fixed-width table, one array per row."""
    lab = t.label
    dash = "---"
    steps = [c for c in cols if c.t_char is not None]
    final = cols[-1]

    def row(name, fn):
        return [[name] + [fn(c) for c in steps] + [dash]]

    table = [["i"] + [str(c.i) for c in steps] + ["n+1"]]
    table += row("T[i]", lambda c: lab(c.t_char))
    table += row("T^rev[i]", lambda c: lab(c.rev_char))
    table += row("LCP[i]", lambda c: str(c.lcp))
    table += row("BWT[i]", lambda c: lab(c.bwt))
    table += row("w(i)", lambda c: str(c.w))
    table += row("SA[i]", lambda c: str(c.sa))
    table += row("n-SA[i]+1", lambda c: str(c.p_text))
    table += row("LCP[i]=w(i)?", lambda c: _flag(c.lcp_equals_w))
    table += row("curr_b", lambda c: str(c.curr_b))
    table += row("w(i)>-1?", lambda c: _flag(c.weighted))
    table += row("i=Candt?", lambda c: _flag(c.verdict))
    depth = max(1, max(len(c.rows) for c in steps))
    for d in range(depth):
        cells = ["rowList" if d == 0 else ""]
        for c in steps:
            cells.append(
                f"({c.rows[d].p_text},{lab(c.rows[d].char)},{c.rows[d].weight})" if d < len(c.rows) else ""
            )
        cells.append(dash if d == 0 else "")
        table.append(cells)
    for sym in range(t.sigma):
        cells = [f"result_{lab(sym)}"]
        for c in steps + [final]:
            cells.append(",".join(map(str, c.results[sym])))
        table.append(cells)

    widths = [max(len(r[k]) for r in table) for k in range(len(table[0]))]
    return "\n".join(
        " | ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in table
    ) + "\n"


def trace_as_dicts(t: Text, cols: list[TraceColumn]) -> list[dict]:
    out = []
    for c in cols:
        d = asdict(c)
        d["rows"] = [[r.p_text, t.label(r.char), r.weight] for r in c.rows]
        d["results"] = {t.label(k): list(v) for k, v in enumerate(c.results)}
        for key in ("t_char", "rev_char", "bwt"):
            if d[key] is not None:
                d[key] = t.label(d[key])
        out.append(d)
    return out
