"""
Serpent pieces used by Sosemanuk: bitsliced S-boxes, the linear transform,
the key schedule (100 subkeys) and the 24-round Serpent24 used for IV injection.

The S-boxes are boolean-formula sequences over four words. Each takes the
four input words in order and returns the four output words in order.
"""

from typing import Callable, List, Sequence, Tuple

from .sosemanuk_constants import PHI
from .words import MASK32, Word32, load_words_le, rotl32

Block = Tuple[Word32, Word32, Word32, Word32]

SUBKEY_COUNT = 100
SERPENT24_ROUNDS = 24

M = MASK32


def sbox0(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r3 ^= r0; r4 = r1; r1 &= r3; r4 ^= r2
    r1 ^= r0; r0 |= r3; r0 ^= r4; r4 ^= r3
    r3 ^= r2; r2 |= r1; r2 ^= r4; r4 ^= M
    r4 |= r1; r1 ^= r3; r1 ^= r4; r3 |= r0
    r1 ^= r3; r4 ^= r3
    return r1, r4, r2, r0


def sbox1(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r0 ^= M; r2 ^= M; r4 = r0; r0 &= r1
    r2 ^= r0; r0 |= r3; r3 ^= r2; r1 ^= r0
    r0 ^= r4; r4 |= r1; r1 ^= r3; r2 |= r0
    r2 &= r4; r0 ^= r1; r1 &= r2; r1 ^= r0
    r0 &= r2; r0 ^= r4
    return r2, r0, r3, r1


def sbox2(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r4 = r0; r0 &= r2; r0 ^= r3; r2 ^= r1
    r2 ^= r0; r3 |= r4; r3 ^= r1; r4 ^= r2
    r1 = r3; r3 |= r4; r3 ^= r0; r0 &= r1
    r4 ^= r0; r1 ^= r3; r1 ^= r4; r4 ^= M
    return r2, r3, r1, r4


def sbox3(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r4 = r0; r0 |= r3; r3 ^= r1; r1 &= r4
    r4 ^= r2; r2 ^= r3; r3 &= r0; r4 |= r1
    r3 ^= r4; r0 ^= r1; r4 &= r0; r1 ^= r3
    r4 ^= r2; r1 |= r0; r1 ^= r2; r0 ^= r3
    r2 = r1; r1 |= r3; r1 ^= r0
    return r1, r2, r3, r4


def sbox4(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r1 ^= r3; r3 ^= M; r2 ^= r3; r3 ^= r0
    r4 = r1; r1 &= r3; r1 ^= r2; r4 ^= r3
    r0 ^= r4; r2 &= r4; r2 ^= r0; r0 &= r1
    r3 ^= r0; r4 |= r1; r4 ^= r0; r0 |= r3
    r0 ^= r2; r2 &= r3; r0 ^= M; r4 ^= r2
    return r1, r4, r0, r3


def sbox5(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r0 ^= r1; r1 ^= r3; r3 ^= M; r4 = r1
    r1 &= r0; r2 ^= r3; r1 ^= r2; r2 |= r4
    r4 ^= r3; r3 &= r1; r3 ^= r0; r4 ^= r1
    r4 ^= r2; r2 ^= r0; r0 &= r3; r2 ^= M
    r0 ^= r4; r4 |= r3; r2 ^= r4
    return r1, r3, r0, r2


def sbox6(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r2 ^= M; r4 = r3; r3 &= r0; r0 ^= r4
    r3 ^= r2; r2 |= r4; r1 ^= r3; r2 ^= r0
    r0 |= r1; r2 ^= r1; r4 ^= r0; r0 |= r3
    r0 ^= r2; r4 ^= r3; r4 ^= r0; r3 ^= M
    r2 &= r4; r2 ^= r3
    return r0, r1, r4, r2


def sbox7(r0: Word32, r1: Word32, r2: Word32, r3: Word32) -> Block:
    r4 = r1; r1 |= r2; r1 ^= r3; r4 ^= r2
    r2 ^= r1; r3 |= r4; r3 &= r0; r4 ^= r2
    r3 ^= r1; r1 |= r4; r1 ^= r0; r0 |= r4
    r0 ^= r2; r1 ^= r4; r2 ^= r1; r1 &= r0
    r1 ^= r4; r2 ^= M; r2 |= r0; r4 ^= r2
    return r4, r3, r1, r0


SBOXES: Tuple[Callable[..., Block], ...] = (
    sbox0, sbox1, sbox2, sbox3, sbox4, sbox5, sbox6, sbox7,
)


def linear_transform(x0: Word32, x1: Word32, x2: Word32, x3: Word32) -> Block:
    x0 = rotl32(x0, 13)
    x2 = rotl32(x2, 3)
    x1 ^= x0 ^ x2
    x3 ^= x2 ^ ((x0 << 3) & M)
    x1 = rotl32(x1, 1)
    x3 = rotl32(x3, 7)
    x0 ^= x1 ^ x3
    x2 ^= x3 ^ ((x1 << 7) & M)
    x0 = rotl32(x0, 5)
    x2 = rotl32(x2, 22)
    return x0, x1, x2, x3


def pad_key(key: bytes) -> bytes:
    """Keys shorter than 32 bytes get a single 1 bit then zeros"""
    if len(key) > 32:
        raise ValueError(f"Serpent key must be at most 32 bytes, got {len(key)}")
    if len(key) == 32:
        return bytes(key)
    return bytes(key) + b"\x01" + bytes(31 - len(key))


def key_schedule(key: bytes) -> List[Word32]:
    """
    Serpent key schedule truncated to 25 round keys (100 words)

    Prekeys follow w_i = (w_{i-8} ^ w_{i-5} ^ w_{i-3} ^ w_{i-1} ^ PHI ^ i) <<< 11;
    round key k uses S-box (3 - k) mod 8.
    """
    w = list(load_words_le(pad_key(key)))
    for i in range(SUBKEY_COUNT):
        w.append(rotl32(w[i] ^ w[i + 3] ^ w[i + 5] ^ w[i + 7] ^ PHI ^ i, 11))
    prekeys = w[8:]

    subkeys: List[Word32] = []
    for k in range(SUBKEY_COUNT // 4):
        sbox = SBOXES[(3 - k) % 8]
        subkeys.extend(sbox(*prekeys[4 * k: 4 * k + 4]))
    return subkeys


def _xor4(block: Sequence[Word32], key: Sequence[Word32]) -> Block:
    return block[0] ^ key[0], block[1] ^ key[1], block[2] ^ key[2], block[3] ^ key[3]


def serpent24_apply(subkeys: Sequence[Word32], block: Sequence[Word32]) -> Tuple[Block, Block, Block]:
    """
    Run Serpent24 over a 4-word block

    Returns:
        (state after round 12, state after round 18, final output)
    """
    if len(subkeys) != SUBKEY_COUNT:
        raise ValueError(f"Serpent24 needs {SUBKEY_COUNT} subkeys, got {len(subkeys)}")
    x = tuple(block)
    out12 = out18 = None
    for rnd in range(SERPENT24_ROUNDS):
        x = _xor4(x, subkeys[4 * rnd: 4 * rnd + 4])
        x = SBOXES[rnd % 8](*x)
        x = linear_transform(*x)
        if rnd == 11:
            out12 = x
        elif rnd == 17:
            out18 = x
    out24 = _xor4(x, subkeys[96:100])
    return out12, out18, out24
