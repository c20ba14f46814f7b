"""
Sosemanuk constants.

The LFSR lives in GF(2^32) built over GF(2^8) = GF(2)[x] / (x^8 + x^7 + x^5 + x^3 + 1),
with beta = x. Multiplication by alpha and by its inverse reduces to one byte-indexed
table lookup each; both tables are generated here from beta powers.
"""

from dataclasses import dataclass
from typing import Tuple

from .words import Word32

GF256_POLY = 0x1A9

# FSM Trans multiplier (odd, so Trans is a bijection)
TRANS_MULTIPLIER = 0x54655307
TRANS_ROTATION = 7

# Serpent key schedule golden-ratio constant
PHI = 0x9E3779B9

LFSR_CELLS = 10

# beta exponents for the four bytes of mul_a[c] and div_a[c], high byte first
_MUL_A_EXPONENTS = (23, 245, 48, 239)
_DIV_A_EXPONENTS = (16, 39, 6, 64)


def gf256_mul(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        if a & 0x100:
            a ^= GF256_POLY
        b >>= 1
    return result


def gf256_pow(a: int, e: int) -> int:
    result = 1
    for _ in range(e):
        result = gf256_mul(result, a)
    return result


@dataclass(frozen=True)
class AlphaTables:
    """Byte-indexed tables for multiplication by alpha and alpha^-1"""
    mul_a: Tuple[Word32, ...]
    div_a: Tuple[Word32, ...]

    @classmethod
    def build(cls) -> "AlphaTables":
        def table(exponents) -> Tuple[Word32, ...]:
            powers = [gf256_pow(0x02, e) for e in exponents]
            return tuple(
                (gf256_mul(c, powers[0]) << 24)
                | (gf256_mul(c, powers[1]) << 16)
                | (gf256_mul(c, powers[2]) << 8)
                | gf256_mul(c, powers[3])
                for c in range(256)
            )

        return cls(mul_a=table(_MUL_A_EXPONENTS), div_a=table(_DIV_A_EXPONENTS))


# Immutable, shared by every instance
ALPHA_TABLES = AlphaTables.build()
