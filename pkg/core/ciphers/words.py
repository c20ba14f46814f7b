"""
Word32 helpers shared by every cipher core.

Python ints are unbounded, so every helper masks back into [0, 2^32).
"""

import struct
from typing import Iterable, Tuple

Word32 = int

MASK32 = 0xFFFFFFFF


def rotl32(x: Word32, n: int) -> Word32:
    """Rotate a 32-bit word left by n bits"""
    n &= 31
    return ((x << n) | (x >> (32 - n))) & MASK32


def rotr32(x: Word32, n: int) -> Word32:
    """Rotate a 32-bit word right by n bits"""
    n &= 31
    return ((x >> n) | (x << (32 - n))) & MASK32


def add32(*xs: Word32) -> Word32:
    """Sum modulo 2^32"""
    return sum(xs) & MASK32


def load_words_le(data: bytes) -> Tuple[Word32, ...]:
    """Unpack a byte string (length multiple of 4) into little-endian words"""
    if len(data) % 4:
        raise ValueError(f"word input must be a multiple of 4 bytes, got {len(data)}")
    return struct.unpack(f"<{len(data) // 4}I", data)


def store_words_le(words: Iterable[Word32]) -> bytes:
    """Pack words into bytes, little-endian"""
    words = tuple(words)
    return struct.pack(f"<{len(words)}I", *words)
