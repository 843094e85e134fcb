"""Linear-time, one-pass construction of minimum-size suffixient arrays."""
from .builder import BuildResult, RunStats, SuffixientArray, build_suffixient
from .errors import (
    AccessViolation,
    ContractViolation,
    EmptyInput,
    Exhausted,
    InputError,
    SentinelViolation,
    SizeLimit,
    UnaryAlphabet,
)
from .index import IndexArrays, build_index
from .pipeline import build_from_arrays, index_text, suffixient_array
from .stream import AuditingStream, IndexTriple, TripleStream
from .text import ReversedText, Text, load_text, reverse_text

__version__ = "0.1.0"
