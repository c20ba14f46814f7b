"""
Salsa20 Core
16-word add-rotate-xor state, 8/12/20 rounds, 64-byte blocks, 64-bit block counter.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from .cipher_core import CipherId, KeystreamCore
from .words import MASK32, Word32, load_words_le, store_words_le

ROUNDS_BY_ID = {
    CipherId.SALSA20_8: 8,
    CipherId.SALSA20_12: 12,
    CipherId.SALSA20_20: 20,
}

SIGMA = load_words_le(b"expand 32-byte k")
TAU = load_words_le(b"expand 16-byte k")

BLOCK_BYTES = 64
COUNTER_MASK = (1 << 64) - 1


def quarter_round(a: Word32, b: Word32, c: Word32, d: Word32) -> Tuple[Word32, Word32, Word32, Word32]:
    """b ^= (a+d)<<<7; c ^= (b+a)<<<9; d ^= (c+b)<<<13; a ^= (d+c)<<<18"""
    t = (a + d) & MASK32
    b ^= ((t << 7) | (t >> 25)) & MASK32
    t = (b + a) & MASK32
    c ^= ((t << 9) | (t >> 23)) & MASK32
    t = (c + b) & MASK32
    d ^= ((t << 13) | (t >> 19)) & MASK32
    t = (d + c) & MASK32
    a ^= ((t << 18) | (t >> 14)) & MASK32
    return a, b, c, d


def double_round(x: Sequence[Word32]) -> list:
    """Column round followed by row round"""
    x = list(x)
    # columns
    x[0], x[4], x[8], x[12] = quarter_round(x[0], x[4], x[8], x[12])
    x[5], x[9], x[13], x[1] = quarter_round(x[5], x[9], x[13], x[1])
    x[10], x[14], x[2], x[6] = quarter_round(x[10], x[14], x[2], x[6])
    x[15], x[3], x[7], x[11] = quarter_round(x[15], x[3], x[7], x[11])
    # rows
    x[0], x[1], x[2], x[3] = quarter_round(x[0], x[1], x[2], x[3])
    x[5], x[6], x[7], x[4] = quarter_round(x[5], x[6], x[7], x[4])
    x[10], x[11], x[8], x[9] = quarter_round(x[10], x[11], x[8], x[9])
    x[15], x[12], x[13], x[14] = quarter_round(x[15], x[12], x[13], x[14])
    return x


@dataclass(frozen=True)
class SalsaState:
    """Salsa20 input matrix plus round count"""
    words: Tuple[Word32, ...]
    rounds: int = 12

    def __post_init__(self):
        if len(self.words) != 16:
            raise ValueError(f"Salsa20 state needs 16 words, got {len(self.words)}")
        if self.rounds not in (8, 12, 20):
            raise ValueError(f"Salsa20 rounds must be 8, 12 or 20, got {self.rounds}")

    @classmethod
    def from_key_nonce(cls, key: bytes, nonce: bytes, rounds: int = 12, counter: int = 0) -> "SalsaState":
        if len(key) == 32:
            k1, k2, constants = key[:16], key[16:], SIGMA
        elif len(key) == 16:
            k1, k2, constants = key, key, TAU
        else:
            raise ValueError(f"Salsa20 key must be 16 or 32 bytes, got {len(key)}")
        if len(nonce) != 8:
            raise ValueError(f"Salsa20 nonce must be 8 bytes, got {len(nonce)}")

        a = load_words_le(k1)
        b = load_words_le(k2)
        n = load_words_le(nonce)
        counter &= COUNTER_MASK
        words = (
            constants[0], a[0], a[1], a[2],
            a[3], constants[1], n[0], n[1],
            counter & MASK32, counter >> 32, constants[2], b[0],
            b[1], b[2], b[3], constants[3],
        )
        return cls(words, rounds)

    @property
    def counter(self) -> int:
        return self.words[8] | (self.words[9] << 32)

    def with_counter(self, counter: int) -> "SalsaState":
        counter &= COUNTER_MASK
        words = list(self.words)
        words[8] = counter & MASK32
        words[9] = counter >> 32
        return SalsaState(tuple(words), self.rounds)


def salsa_block(state: SalsaState) -> bytes:
    """64-byte output block for the state; pure"""
    z = state.words
    for _ in range(state.rounds // 2):
        z = double_round(z)
    return store_words_le((zi + xi) & MASK32 for zi, xi in zip(z, state.words))


class Salsa20Core(KeystreamCore):
    """Salsa20 keystream core with random access by block counter"""

    block_size = BLOCK_BYTES
    seekable = True

    def __init__(self, key: bytes, rounds: int = 12):
        self._key = bytearray(key)
        self.rounds = rounds
        self._state = None

    def load_iv(self, iv: bytes) -> None:
        self._state = SalsaState.from_key_nonce(bytes(self._key), iv, self.rounds)

    @property
    def state(self) -> SalsaState:
        return self._state

    def next_block(self) -> bytes:
        state = self._state
        block = salsa_block(state)
        self._state = state.with_counter(state.counter + 1)
        return block

    def seek_block(self, index: int) -> None:
        self._state = self._state.with_counter(index)

    def wipe(self) -> None:
        for i in range(len(self._key)):
            self._key[i] = 0
        self._state = None
