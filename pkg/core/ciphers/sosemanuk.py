"""
Sosemanuk Core
10-cell LFSR over GF(2^32), two-register FSM, Serpent S-box output transform
over groups of four steps; Serpent24 key schedule and IV injection.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from .cipher_core import CipherId, KeystreamCore, check_iv, check_key
from .serpent import key_schedule as serpent_key_schedule
from .serpent import sbox2, serpent24_apply
from .sosemanuk_constants import (
    ALPHA_TABLES,
    LFSR_CELLS,
    TRANS_MULTIPLIER,
    TRANS_ROTATION,
)
from .words import MASK32, Word32, load_words_le, store_words_le

GROUP_STEPS = 4
BLOCK_BYTES = 16

_MUL_A = ALPHA_TABLES.mul_a
_DIV_A = ALPHA_TABLES.div_a


def trans(z: Word32) -> Word32:
    """FSM mixing map: (z * M mod 2^32) <<< 7"""
    t = (z * TRANS_MULTIPLIER) & MASK32
    return ((t << TRANS_ROTATION) | (t >> (32 - TRANS_ROTATION))) & MASK32


def mul_alpha(x: Word32) -> Word32:
    return ((x << 8) & MASK32) ^ _MUL_A[x >> 24]


def div_alpha(x: Word32) -> Word32:
    return (x >> 8) ^ _DIV_A[x & 0xFF]


def key_schedule(key: bytes) -> List[Word32]:
    """100 Serpent subkeys for a 16..32 byte key"""
    check_key(CipherId.SOSEMANUK, key)
    return serpent_key_schedule(key)


@dataclass
class SosemanukState:
    """LFSR cells s_t..s_{t+9}, FSM registers and the key-derived subkeys"""
    s: List[Word32]
    r1: Word32
    r2: Word32
    subkeys: Tuple[Word32, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.s) != LFSR_CELLS:
            raise ValueError(f"Sosemanuk LFSR needs {LFSR_CELLS} cells, got {len(self.s)}")

    @property
    def lfsr_cells(self) -> Tuple[Word32, ...]:
        return tuple(self.s)

    def elementary_step(self) -> Tuple[Word32, Word32]:
        """
        Advance FSM and LFSR by one step

        Returns:
            (intermediate f_t, dropped LFSR cell s_t)
        """
        s = self.s
        r1 = self.r1
        new_r1 = (self.r2 + ((s[1] ^ s[8]) if r1 & 1 else s[1])) & MASK32
        new_r2 = trans(r1)
        f = ((s[9] + new_r1) & MASK32) ^ new_r2

        dropped = s[0]
        feedback = s[9] ^ div_alpha(s[3]) ^ mul_alpha(dropped)
        del s[0]
        s.append(feedback)

        self.r1 = new_r1
        self.r2 = new_r2
        return f, dropped


def iv_setup(subkeys: Tuple[Word32, ...], iv: bytes) -> SosemanukState:
    """Fill LFSR and FSM from the Serpent24 round-12, round-18 and final outputs"""
    check_iv(CipherId.SOSEMANUK, iv)
    y12, y18, y24 = serpent24_apply(subkeys, load_words_le(iv))

    s = [0] * LFSR_CELLS
    s[9], s[8], s[7], s[6] = y12
    r1, s[4], r2, s[5] = y18
    s[3], s[2], s[1], s[0] = y24
    return SosemanukState(s=s, r1=r1, r2=r2, subkeys=tuple(subkeys))


def sosemanuk_step_group(state: SosemanukState) -> bytes:
    """Four elementary steps, S-box 2 over the intermediates, XOR with dropped cells"""
    f0, v0 = state.elementary_step()
    f1, v1 = state.elementary_step()
    f2, v2 = state.elementary_step()
    f3, v3 = state.elementary_step()
    u0, u1, u2, u3 = sbox2(f0, f1, f2, f3)
    return store_words_le((u0 ^ v0, u1 ^ v1, u2 ^ v2, u3 ^ v3))


class SosemanukCore(KeystreamCore):
    """Sosemanuk keystream core; subkeys are kept so IV resets skip the key schedule"""

    block_size = BLOCK_BYTES

    def __init__(self, key: bytes):
        self.subkeys: Tuple[Word32, ...] = tuple(key_schedule(bytes(key)))
        self.state: SosemanukState = None

    def load_iv(self, iv: bytes) -> None:
        self.state = iv_setup(self.subkeys, iv)

    def next_block(self) -> bytes:
        return sosemanuk_step_group(self.state)

    def wipe(self) -> None:
        self.subkeys = (0,) * len(self.subkeys)
        if self.state is not None:
            self.state.s = [0] * LFSR_CELLS
            self.state.r1 = self.state.r2 = 0
