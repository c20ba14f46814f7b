"""
Rabbit Core
Eight state words, eight counters and a carry bit (513 bits of state);
coupled g-functions produce one 128-bit block per iteration.
"""

from dataclasses import dataclass, field
from typing import Tuple

from .cipher_core import CipherId, KeystreamCore, check_iv, check_key
from .words import MASK32, Word32, add32, load_words_le, rotl32, store_words_le

# Counter increments A_j
A_CONST: Tuple[Word32, ...] = (
    0x4D34D34D, 0xD34D34D3, 0x34D34D34, 0x4D34D34D,
    0xD34D34D3, 0x34D34D34, 0x4D34D34D, 0xD34D34D3,
)

BLOCK_BYTES = 16


@dataclass(frozen=True)
class RabbitState:
    """Rabbit internal state"""
    x: Tuple[Word32, ...]
    c: Tuple[Word32, ...]
    carry: int = 0
    a_const: Tuple[Word32, ...] = field(default=A_CONST, repr=False)

    def __post_init__(self):
        if len(self.x) != 8 or len(self.c) != 8:
            raise ValueError("Rabbit state needs 8 state words and 8 counters")
        if self.carry not in (0, 1):
            raise ValueError(f"carry must be 0 or 1, got {self.carry}")

    def copy(self) -> "RabbitState":
        return RabbitState(tuple(self.x), tuple(self.c), self.carry)

    def to_bytes(self) -> bytes:
        """Serialize the 513 state bits: x words, c words, then one carry byte"""
        return store_words_le(self.x + self.c) + bytes([self.carry])


def g_function(u: Word32, v: Word32) -> Word32:
    """Square (u+v) mod 2^32 as a 64-bit value; fold high word into low"""
    s = (u + v) & MASK32
    sq = s * s
    return (sq ^ (sq >> 32)) & MASK32


def counter_update(state: RabbitState) -> RabbitState:
    """c_j <- c_j + A_j + carry, carry chained across j = 0..7"""
    carry = state.carry
    c = []
    for cj, aj in zip(state.c, state.a_const):
        t = cj + aj + carry
        carry = t >> 32
        c.append(t & MASK32)
    return RabbitState(state.x, tuple(c), carry, state.a_const)


def next_state(state: RabbitState) -> RabbitState:
    """One Rabbit iteration: counter update then the coupled g-functions"""
    state = counter_update(state)
    g0, g1, g2, g3, g4, g5, g6, g7 = (g_function(xj, cj) for xj, cj in zip(state.x, state.c))
    x = (
        add32(g0, rotl32(g7, 16), rotl32(g6, 16)),
        add32(g1, rotl32(g0, 8), g7),
        add32(g2, rotl32(g1, 16), rotl32(g0, 16)),
        add32(g3, rotl32(g2, 8), g1),
        add32(g4, rotl32(g3, 16), rotl32(g2, 16)),
        add32(g5, rotl32(g4, 8), g3),
        add32(g6, rotl32(g5, 16), rotl32(g4, 16)),
        add32(g7, rotl32(g6, 8), g5),
    )
    return RabbitState(x, state.c, state.carry, state.a_const)


def key_setup(key: bytes) -> RabbitState:
    """
    Expand a 16-byte key into the master state

    Four iterations follow the expansion, then each counter is XORed with the
    state word four positions ahead.
    """
    check_key(CipherId.RABBIT, key)
    k0, k1, k2, k3 = load_words_le(key)
    hi, lo = 0xFFFF0000, 0x0000FFFF

    x = (
        k0,
        ((k3 << 16) | (k2 >> 16)) & MASK32,
        k1,
        ((k0 << 16) | (k3 >> 16)) & MASK32,
        k2,
        ((k1 << 16) | (k0 >> 16)) & MASK32,
        k3,
        ((k2 << 16) | (k1 >> 16)) & MASK32,
    )
    c = (
        rotl32(k2, 16),
        (k0 & hi) | (k1 & lo),
        rotl32(k3, 16),
        (k1 & hi) | (k2 & lo),
        rotl32(k0, 16),
        (k2 & hi) | (k3 & lo),
        rotl32(k1, 16),
        (k3 & hi) | (k0 & lo),
    )

    state = RabbitState(x, c, 0)
    for _ in range(4):
        state = next_state(state)

    c = tuple(cj ^ state.x[(j + 4) & 7] for j, cj in enumerate(state.c))
    return RabbitState(state.x, c, state.carry)


def iv_setup(master: RabbitState, iv: bytes) -> RabbitState:
    """Derive the per-message state from the master state and an 8-byte IV"""
    check_iv(CipherId.RABBIT, iv)
    i0, i2 = load_words_le(iv)
    i1 = (i0 >> 16) | (i2 & 0xFFFF0000)
    i3 = ((i2 << 16) | (i0 & 0x0000FFFF)) & MASK32
    mix = (i0, i1, i2, i3, i0, i1, i2, i3)

    state = RabbitState(master.x, tuple(cj ^ m for cj, m in zip(master.c, mix)), master.carry)
    for _ in range(4):
        state = next_state(state)
    return state


def extract(state: RabbitState) -> bytes:
    """128-bit output block from half-word combinations of x"""
    x = state.x
    return store_words_le((
        (x[0] ^ (x[5] >> 16) ^ (x[3] << 16)) & MASK32,
        (x[2] ^ (x[7] >> 16) ^ (x[5] << 16)) & MASK32,
        (x[4] ^ (x[1] >> 16) ^ (x[7] << 16)) & MASK32,
        (x[6] ^ (x[3] >> 16) ^ (x[1] << 16)) & MASK32,
    ))


class RabbitCore(KeystreamCore):
    """Rabbit keystream core; the post-key-setup master state is retained for IV resets"""

    block_size = BLOCK_BYTES

    def __init__(self, key: bytes):
        self.master = key_setup(bytes(key))
        self.state = self.master

    def load_iv(self, iv: bytes) -> None:
        self.state = iv_setup(self.master, iv)

    def next_block(self) -> bytes:
        self.state = next_state(self.state)
        return extract(self.state)

    def wipe(self) -> None:
        zero = RabbitState((0,) * 8, (0,) * 8, 0)
        self.master = zero
        self.state = zero
