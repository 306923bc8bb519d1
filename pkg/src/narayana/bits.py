"""Packed bit storage.

Bits are packed most-significant-bit first: stream bit ``i`` lives in byte
``i // 8`` at bit ``7 - i % 8``. Unused low bits of the last byte are zero.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitBuffer:
    data: bytes = b""
    bit_length: int = 0

    def __post_init__(self):
        if self.bit_length < 0 or self.bit_length > 8 * len(self.data):
            raise ValueError(f"bit_length {self.bit_length} does not fit in {len(self.data)} bytes")
        if len(self.data) != (self.bit_length + 7) // 8:
            raise ValueError("data has bytes past the last valid bit")
        spare = -self.bit_length % 8
        if spare and self.data[-1] & ((1 << spare) - 1):
            raise ValueError("bits past bit_length must be zero")

    @classmethod
    def from_bits(cls, bits: str) -> BitBuffer:
        """Pack a string of ``'0'``/``'1'`` characters."""
        if not bits:
            return cls()
        size = (len(bits) + 7) // 8
        padded = bits.ljust(8 * size, "0")
        return cls(int(padded, 2).to_bytes(size, "big"), len(bits))

    @classmethod
    def from_bytes(cls, data: bytes) -> BitBuffer:
        """Wrap raw bytes; every bit counts as valid."""
        return cls(bytes(data), 8 * len(data))

    def to_bits(self) -> str:
        if not self.data:
            return ""
        return format(int.from_bytes(self.data, "big"), f"0{8 * len(self.data)}b")[: self.bit_length]

    def __len__(self) -> int:
        return self.bit_length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.bit_length:
            raise IndexError(i)
        return (self.data[i >> 3] >> (7 - (i & 7))) & 1

    @property
    def padded_length(self) -> int:
        return 8 * len(self.data)


class BitCursor:
    """Single-reader position over a :class:`BitBuffer`."""

    def __init__(self, buffer: BitBuffer, position: int = 0):
        if not 0 <= position <= buffer.bit_length:
            raise ValueError(f"position {position} outside [0, {buffer.bit_length}]")
        self.buffer = buffer
        self.position = position

    @property
    def remaining(self) -> int:
        return self.buffer.bit_length - self.position

    def at_end(self) -> bool:
        return self.position >= self.buffer.bit_length

    def read_bit(self) -> int:
        if self.at_end():
            raise EOFError("read past end of bit buffer")
        bit = self.buffer[self.position]
        self.position += 1
        return bit

    def read_bits(self, count: int) -> str:
        if count > self.remaining:
            raise EOFError(f"wanted {count} bits, {self.remaining} left")
        out = "".join(str(self.buffer[i]) for i in range(self.position, self.position + count))
        self.position += count
        return out

    def read_until_pair(self) -> str | None:
        """Bits up to and including the next ``11`` pair, or None if there is none.

        The cursor does not move when no pair is found.
        """
        prev = 0
        for i in range(self.position, self.buffer.bit_length):
            bit = self.buffer[i]
            if bit and prev:
                out = "".join(str(self.buffer[j]) for j in range(self.position, i + 1))
                self.position = i + 1
                return out
            prev = bit
        return None
