"""Narayana universal code for positive integers.

>>> from narayana import encode, decode
>>> str(encode(10))
'1000011'
>>> decode("1000011")
10
"""
from .bits import BitBuffer, BitCursor
from .codec import (
    CODECS,
    Codeword,
    codeword_length,
    decode,
    decode_stream,
    decode_stream_lenient,
    elias_gamma_decode,
    elias_gamma_encode,
    encode,
    encode_stream,
    fibonacci_decode,
    fibonacci_encode,
)
from .errors import (
    CapacityExceeded,
    MalformedCodeword,
    NarayanaError,
    NonConvergence,
    SearchBudgetExceeded,
    TrailingGarbage,
)
from .sequences import (
    RatioSample,
    SequenceKind,
    SequenceTable,
    consecutive_ratios,
    general_term,
    j_term,
    largest_j_index_leq,
    narayana,
    narayana_ratio_limit,
    variant_term,
)
from .zeckendorf import Decomposition, Gap, all_decompositions, decompose, recompose, representable

__version__ = "0.1.0"
