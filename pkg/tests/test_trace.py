import pytest

from suffixient.errors import SizeLimit
from suffixient.text import load_text
from suffixient.trace import format_trace, trace, trace_as_dicts


def test_two_column_trace():
    t = load_text(b"a")
    cols = trace(t)
    assert [c.i for c in cols] == [1, 2, 3]
    assert [c.sa for c in cols[:2]] == [2, 1]
    assert cols[-1].results == ((2,), (1,))


def test_unary_text_keeps_rowlist_empty_after_first_column():
    cols = trace(load_text(b"aaaa"))
    assert cols[0].rows == ()
    assert cols[0].verdict is None


def test_rendering(golden):
    cols = trace(golden)
    table = format_trace(golden, cols)
    lines = table.splitlines()
    assert lines[0].split("|")[0].strip() == "i"
    assert any(line.lstrip().startswith("result_$") for line in lines)
    assert "(10,$,4)" in table
    dicts = trace_as_dicts(golden, cols)
    assert dicts[4]["rows"][0] == [10, "$", 4]
    assert dicts[-1]["results"] == {"$": [10], "A": [1], "C": [5], "G": [7]}


def test_trace_cap():
    with pytest.raises(SizeLimit):
        trace(load_text(b"ab" * 40))
