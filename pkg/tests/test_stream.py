import pytest

from suffixient.errors import AccessViolation, Exhausted
from suffixient.index import build_index
from suffixient.stream import AuditingStream, IndexTriple, TripleStream
from suffixient.text import reverse_text


@pytest.fixture
def arrays(golden):
    return build_index(reverse_text(golden))


def test_window_and_virtual_column(arrays):
    s = TripleStream(arrays)
    assert s.current() == IndexTriple(1, 10, -1, 1)
    assert s.peek_next() == IndexTriple(2, 9, 0, 3)
    for _ in range(9):
        s.advance()
    assert s.current().i == 10
    assert s.peek_next() == IndexTriple(11, 0, -1, -1)
    s.advance()
    assert s.exhausted
    with pytest.raises(Exhausted):
        s.current()
    with pytest.raises(Exhausted):
        s.advance()
    assert s.advances == 10


def test_reads_outside_window_are_rejected(arrays):
    s = TripleStream(arrays)
    s.advance()
    s.advance()
    assert s.read(3).i == 3
    assert s.read(4).i == 4
    for bad in (1, 2, 5, 11):
        with pytest.raises(AccessViolation):
            s.read(bad)


def test_auditing_counts_materializations(arrays):
    s = AuditingStream(arrays)
    s.current()
    s.peek_next()
    s.advance()
    s.current()
    assert s.materialized[1] == 1
    assert s.materialized[2] == 2
    assert s.max_materializations == 2
