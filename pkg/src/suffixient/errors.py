"""Exception hierarchy shared by every stage of the pipeline."""


class SuffixientError(Exception):
    pass


class InputError(SuffixientError):
    """Raw input cannot be turned into a sentinel-terminated text."""


class EmptyInput(InputError):
    pass


class SentinelViolation(InputError):
    pass


class UnaryAlphabet(InputError):
    pass


class MalformedInput(InputError):
    pass


class SizeLimit(SuffixientError):
    """A brute-force check was requested on an input above its size cap."""


class StreamError(SuffixientError):
    pass


class Exhausted(StreamError):
    pass


class AccessViolation(StreamError):
    """A consumer tried to read outside the one-step look-ahead window."""


class ContractViolation(SuffixientError):
    pass
