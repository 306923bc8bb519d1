"""Narayana universal code plus Fibonacci and Elias-gamma baselines.

A Narayana codeword for ``n`` lists, for ``i = 0 .. d``, whether ``J(i)``
takes part in the greedy decomposition of ``n``, then appends a single 1.
Selected indices are at least three apart, so the only adjacent ``11`` in a
codeword is the terminating one and concatenated codewords need no framing.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from .bits import BitBuffer, BitCursor
from .errors import CapacityExceeded, MalformedCodeword, TrailingGarbage
from .sequences import DEFAULT_CAPACITY, fibonacci_table, j_table, largest_j_index_leq
from .zeckendorf import decompose

__all__ = [
    "BitBuffer",
    "BitCursor",
    "CODECS",
    "Codeword",
    "LenientDecode",
    "codeword_length",
    "decode",
    "decode_stream",
    "decode_stream_lenient",
    "elias_gamma_decode",
    "elias_gamma_encode",
    "encode",
    "encode_stream",
    "fibonacci_decode",
    "fibonacci_encode",
]


@dataclass(frozen=True)
class Codeword:
    """A codeword as a string of ``'0'``/``'1'``; bit 0 comes first."""

    bits: str

    def __str__(self) -> str:
        return self.bits

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def length(self) -> int:
        return len(self.bits)

    @classmethod
    def parse(cls, bits: str) -> Codeword:
        if not bits or bits.strip("01"):
            raise MalformedCodeword(f"not a bit string: {bits!r}")
        return cls(bits)


def _bits_of(cw: Codeword | str) -> str:
    bits = cw.bits if isinstance(cw, Codeword) else cw
    if bits.strip("01"):
        raise MalformedCodeword(f"not a bit string: {bits!r}")
    return bits


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"only positive integers can be encoded, got {n}")
    if n > DEFAULT_CAPACITY:
        raise CapacityExceeded(f"{n} exceeds {DEFAULT_CAPACITY}")


def _check_terminated(bits: str) -> None:
    # the first 11 pair must be the last two bits
    if len(bits) < 2 or bits.find("11") != len(bits) - 2:
        if not bits.endswith("11"):
            raise MalformedCodeword(f"{bits!r} does not end in 11")
        raise MalformedCodeword(f"{bits!r} has 11 before its end")


def _sum_selected(bits: str, terms: list[int]) -> int:
    total = 0
    i = bits.find("1")
    while i != -1:
        total += terms[i]
        i = bits.find("1", i + 1)
    return total


# -- Narayana ---------------------------------------------------------------


def encode(n: int) -> Codeword:
    _check_positive(n)
    dec = decompose(n)
    bits = ["0"] * (dec.top + 2)
    for i in dec.indices:
        bits[i] = "1"
    bits[-1] = "1"
    return Codeword("".join(bits))


def decode(cw: Codeword | str) -> int:
    """Drop the terminating 1 and add up ``J(i)`` for every set bit ``i``."""
    bits = _bits_of(cw)
    _check_terminated(bits)
    data = bits[:-1]
    try:
        value = _sum_selected(data, j_table().prefix(len(data)))
    except CapacityExceeded:
        raise MalformedCodeword(f"codeword of {len(bits)} bits is longer than any encodable value") from None
    if value > DEFAULT_CAPACITY:
        raise MalformedCodeword(f"codeword decodes to {value}, beyond {DEFAULT_CAPACITY}")
    return value


def codeword_length(n: int) -> int:
    _check_positive(n)
    return largest_j_index_leq(n) + 2


# -- Fibonacci baseline -------------------------------------------------------


def fibonacci_encode(n: int) -> Codeword:
    """Classical Fibonacci code over 1, 2, 3, 5, 8, ... with a terminal 1."""
    _check_positive(n)
    terms = fibonacci_table().covering(n)
    top = bisect_right(terms, n) - 1
    bits = ["0"] * (top + 2)
    rest = n
    while rest:
        k = bisect_right(terms, rest, 0, top + 1) - 1
        bits[k] = "1"
        rest -= terms[k]
    bits[-1] = "1"
    return Codeword("".join(bits))


def fibonacci_decode(cw: Codeword | str) -> int:
    bits = _bits_of(cw)
    _check_terminated(bits)
    data = bits[:-1]
    try:
        return _sum_selected(data, fibonacci_table().prefix(len(data)))
    except CapacityExceeded:
        raise MalformedCodeword(f"codeword of {len(bits)} bits is longer than any encodable value") from None


# -- Elias gamma baseline -----------------------------------------------------


def elias_gamma_encode(n: int) -> Codeword:
    """``floor(log2 n)`` zeros followed by ``n`` in binary."""
    _check_positive(n)
    binary = format(n, "b")
    return Codeword("0" * (len(binary) - 1) + binary)


def elias_gamma_decode(cw: Codeword | str) -> int:
    bits = _bits_of(cw)
    first = bits.find("1")
    if first == -1:
        raise MalformedCodeword(f"{bits!r} has no terminating binary part")
    if len(bits) != 2 * first + 1:
        raise MalformedCodeword(f"{bits!r} has {first} leading zeros but {len(bits) - first} value bits")
    return int(bits[first:], 2)


# -- streams -----------------------------------------------------------------


def _read_terminated(decoder: Callable[[str], int]) -> Callable[[str, int], tuple[int, int] | None]:
    def read(bits: str, pos: int) -> tuple[int, int] | None:
        pair = bits.find("11", pos)
        if pair == -1:
            return None
        end = pair + 2
        return decoder(bits[pos:end]), end

    return read


def _read_gamma(bits: str, pos: int) -> tuple[int, int] | None:
    first = bits.find("1", pos)
    if first == -1:
        return None
    end = first + (first - pos) + 1
    if end > len(bits):
        raise MalformedCodeword(f"gamma codeword at bit {pos} is truncated")
    return int(bits[first:end], 2), end


class StreamCodec(NamedTuple):
    name: str
    encode: Callable[[int], Codeword]
    decode: Callable[[Codeword | str], int]
    read: Callable[[str, int], "tuple[int, int] | None"]
    #: True when every codeword ends in the only 11 pair it contains
    self_synchronizing: bool


CODECS: dict[str, StreamCodec] = {
    "narayana": StreamCodec("narayana", encode, decode, _read_terminated(decode), True),
    "fibonacci": StreamCodec(
        "fibonacci", fibonacci_encode, fibonacci_decode, _read_terminated(fibonacci_decode), True
    ),
    "elias-gamma": StreamCodec(
        "elias-gamma", elias_gamma_encode, elias_gamma_decode, _read_gamma, False
    ),
}


def _codec(name: str) -> StreamCodec:
    try:
        return CODECS[name]
    except KeyError:
        raise ValueError(f"unknown codec {name!r}; choose from {', '.join(CODECS)}") from None


def encode_bits(values: Iterable[int], codec: str = "narayana") -> str:
    enc = _codec(codec).encode
    return "".join(enc(v).bits for v in values)


def encode_stream(values: Iterable[int], codec: str = "narayana") -> BitBuffer:
    """Concatenate codewords and zero-pad to a whole number of bytes."""
    return BitBuffer.from_bits(encode_bits(values, codec))


def decode_bits(bits: str, strict: bool = True, codec: str = "narayana") -> list[int]:
    read = _codec(codec).read
    values = []
    pos = 0
    while True:
        item = read(bits, pos)
        if item is None:
            break
        value, pos = item
        values.append(value)
    residue = bits[pos:]
    if strict and ("1" in residue or len(residue) >= 8):
        raise TrailingGarbage(f"{len(residue)} bits after the last codeword are not zero padding")
    return values


def decode_stream(buffer: BitBuffer, strict: bool = True, codec: str = "narayana") -> list[int]:
    """Split a packed stream back into integers.

    In strict mode whatever follows the last codeword must be fewer than
    eight zero bits.
    """
    return decode_bits(buffer.to_bits(), strict, codec)


class LenientDecode(NamedTuple):
    values: list[int]
    #: (start, end) bit span of each decoded value
    spans: list[tuple[int, int]]
    #: (start, end) bit ranges dropped because they held no valid codeword
    skipped: list[tuple[int, int]]


def decode_bits_lenient(
    bits: str,
    codec: str = "narayana",
    start: int = 0,
    until: Callable[[int], bool] | None = None,
) -> LenientDecode:
    """Decode whatever can be decoded, skipping past damage.

    A piece that fails to decode is dropped up to the next ``11`` delimiter
    (for gamma, one bit at a time). A trailing piece that contains a 1 but
    no full codeword is reported as skipped. Decoding begins at bit ``start``
    and, if ``until`` is given, stops after the first piece whose end
    position satisfies it.
    """
    c = _codec(codec)
    values, spans, skipped = [], [], []
    pos = start
    while pos < len(bits):
        try:
            item = c.read(bits, pos)
        except MalformedCodeword:
            if c.self_synchronizing:
                pair = bits.find("11", pos)
                end = len(bits) if pair == -1 else pair + 2
            else:
                end = pos + 1
            skipped.append((pos, end))
            pos = end
        else:
            if item is None:
                break
            value, end = item
            values.append(value)
            spans.append((pos, end))
            pos = end
        if until is not None and until(pos):
            return LenientDecode(values, spans, skipped)
    if "1" in bits[pos:]:
        skipped.append((pos, len(bits)))
    return LenientDecode(values, spans, skipped)


def decode_stream_lenient(buffer: BitBuffer, codec: str = "narayana") -> LenientDecode:
    return decode_bits_lenient(buffer.to_bits(), codec)
