"""
HC-128 Core
Two 512-word secret tables P and Q; one table entry updated and one 32-bit
word emitted per step; every entry of both tables is rewritten each 1024 steps.
"""

import struct
from typing import List, Optional, Tuple

from .cipher_core import CipherId, KeystreamCore, check_iv, check_key
from .words import MASK32, Word32, add32, load_words_le, rotl32, rotr32

TABLE_SIZE = 512
WINDOW = 1024
INIT_WORDS = 1280

_pack_word = struct.Struct("<I").pack


def f1(x: Word32) -> Word32:
    return rotr32(x, 7) ^ rotr32(x, 18) ^ (x >> 3)


def f2(x: Word32) -> Word32:
    return rotr32(x, 17) ^ rotr32(x, 19) ^ (x >> 10)


def g1(x: Word32, y: Word32, z: Word32) -> Word32:
    return add32(rotr32(x, 10) ^ rotr32(z, 23), rotr32(y, 8))


def g2(x: Word32, y: Word32, z: Word32) -> Word32:
    return add32(rotl32(x, 10) ^ rotl32(z, 23), rotl32(y, 8))


class HcState:
    """
    HC-128 tables and step counter

    ``write_log``, when set to a list, receives one ``(table, slot)`` entry per step.
    """

    def __init__(self, P: List[Word32], Q: List[Word32], i: int = 0):
        if len(P) != TABLE_SIZE or len(Q) != TABLE_SIZE:
            raise ValueError(f"HC-128 tables must hold {TABLE_SIZE} words")
        self.P = list(P)
        self.Q = list(Q)
        self.i = i
        self.write_log: Optional[List[Tuple[str, int]]] = None

    def copy(self) -> "HcState":
        return HcState(self.P, self.Q, self.i)

    def step(self) -> Word32:
        """Update one table entry and return the next output word"""
        i = self.i
        j = i & 511
        if (i & 1023) < 512:
            P = self.P
            P[j] = (P[j] + g1(P[(j - 3) & 511], P[(j - 10) & 511], P[(j - 511) & 511])) & MASK32
            out = h1(self, P[(j - 12) & 511]) ^ P[j]
            table = "P"
        else:
            Q = self.Q
            Q[j] = (Q[j] + g2(Q[(j - 3) & 511], Q[(j - 10) & 511], Q[(j - 511) & 511])) & MASK32
            out = h2(self, Q[(j - 12) & 511]) ^ Q[j]
            table = "Q"
        if self.write_log is not None:
            self.write_log.append((table, j))
        self.i = i + 1
        return out

    def warm_step(self) -> None:
        """Initialization step: the output replaces the entry just updated"""
        j = self.i & 511
        out = self.step()
        if ((self.i - 1) & 1023) < 512:
            self.P[j] = out
        else:
            self.Q[j] = out

    def wipe(self) -> None:
        self.P = [0] * TABLE_SIZE
        self.Q = [0] * TABLE_SIZE
        self.i = 0


def h1(state: HcState, x: Word32) -> Word32:
    """Output filter for P steps: two Q lookups keyed by bytes 0 and 2 of x"""
    Q = state.Q
    return add32(Q[x & 0xFF], Q[256 + ((x >> 16) & 0xFF)])


def h2(state: HcState, x: Word32) -> Word32:
    """Output filter for Q steps: two P lookups keyed by bytes 0 and 2 of x"""
    P = state.P
    return add32(P[x & 0xFF], P[256 + ((x >> 16) & 0xFF)])


def init(key: bytes, iv: bytes) -> HcState:
    """
    Key and IV setup

    Args:
        key: 16-byte key
        iv: 16-byte IV

    Returns:
        State after the 1024 warm-up steps, step counter at 0
    """
    check_key(CipherId.HC128, key)
    check_iv(CipherId.HC128, iv)

    k = list(load_words_le(key))
    v = list(load_words_le(iv))
    w = k + k + v + v + [0] * (INIT_WORDS - 16)
    for i in range(16, INIT_WORDS):
        w[i] = add32(f2(w[i - 2]), w[i - 7], f1(w[i - 15]), w[i - 16], i)

    state = HcState(w[256:768], w[768:1280])
    for _ in range(WINDOW):
        state.warm_step()
    state.i = 0
    return state


def step(state: HcState) -> Word32:
    return state.step()


class HC128Core(KeystreamCore):
    """HC-128 keystream core emitting one little-endian word per block"""

    block_size = 4

    def __init__(self, key: bytes):
        self._key = bytearray(key)
        self.state: Optional[HcState] = None

    def load_iv(self, iv: bytes) -> None:
        # key and IV are mixed together, so every IV load reruns the full setup
        self.state = init(bytes(self._key), iv)

    def next_block(self) -> bytes:
        return _pack_word(self.state.step())

    def wipe(self) -> None:
        for i in range(len(self._key)):
            self._key[i] = 0
        if self.state is not None:
            self.state.wipe()
