"""
Unit tests for the Salsa20 family (8, 12 and 20 rounds).
"""

import sys
import os

import numpy as np
import pytest

# Add the project root to the path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.ciphers import CipherId, new_cipher
from core.ciphers.salsa20 import Salsa20Core, SalsaState, double_round, quarter_round, salsa_block, SIGMA, TAU
from core.ciphers.words import load_words_le

ZERO_KEY_FIRST_BLOCK = {
    CipherId.SALSA20_8: (
        "9f591da5f99c235445ea91866ead681b977c4ffa036d770fbca79d41fb014178"
        "cf8ecf3164e5e77d7495dc0195081edb2f45c8a1b17d2bec8df3ef9fb7618075"
    ),
    CipherId.SALSA20_12: (
        "bd78a2f8118a563c761db4f2fbe055da97f90988d27594d9c5dfd13a3efeaa3f"
        "68f0d2564850adf5017433968e4b3405ac49a39532124fcd6f47e415c7028a83"
    ),
    CipherId.SALSA20_20: (
        "9a97f65b9b4c721b960a672145fca8d4e32e67f9111ea979ce9c4826806aeee6"
        "3de9c0da2bd7f91ebcb2639bf989c6251b29bf38d39a9bdce7c55f4b2ac12a39"
    ),
}


class TestSalsaRounds:
    """Quarter round and double round oracles"""

    def test_quarter_round_unit_input(self):
        """quarter_round(1, 0, 0, 0) by hand evaluation"""
        print("\n🧪 Testing quarter round...")
        assert quarter_round(0x00000001, 0, 0, 0) == (0x08008145, 0x00000080, 0x00010200, 0x20500000)
        print("✅ quarter_round(1,0,0,0) matches")

    def test_quarter_round_zero(self):
        assert quarter_round(0, 0, 0, 0) == (0, 0, 0, 0)

    def test_double_round(self):
        """Double round of (1, 0, ..., 0)"""
        print("\n🧪 Testing double round...")
        expected = [
            0x8186a22d, 0x0040a284, 0x82479210, 0x06929051,
            0x08000090, 0x02402200, 0x00004000, 0x00800000,
            0x00010200, 0x20400000, 0x08008104, 0x00000000,
            0x20500000, 0xa0000040, 0x0008180a, 0x612a8020,
        ]
        assert double_round([1] + [0] * 15) == expected
        print("✅ Double round matches")

    def test_constants(self):
        assert SIGMA == (0x61707865, 0x3320646e, 0x79622d32, 0x6b206574)
        assert TAU == (0x61707865, 0x3120646e, 0x79622d36, 0x6b206574)


class TestSalsaState:
    """Input matrix layout and validation"""

    def test_layout_32_byte_key(self):
        key = bytes(range(1, 33))
        state = SalsaState.from_key_nonce(key, bytes(range(8)), rounds=12)
        assert state.words[0] == SIGMA[0]
        assert state.words[5] == SIGMA[1]
        assert state.words[10] == SIGMA[2]
        assert state.words[15] == SIGMA[3]
        assert state.words[1] == 0x04030201
        assert state.words[11] == 0x14131211
        assert state.words[6] == 0x03020100
        assert state.counter == 0

    def test_16_byte_key_repeats(self):
        key = bytes(range(16))
        state = SalsaState.from_key_nonce(key, bytes(8), rounds=20)
        assert state.words[1:5] == state.words[11:15]
        assert state.words[0] == TAU[0]

    def test_with_counter(self):
        state = SalsaState.from_key_nonce(bytes(32), bytes(8)).with_counter((1 << 32) + 5)
        assert state.words[8] == 5
        assert state.words[9] == 1
        assert state.counter == (1 << 32) + 5

    def test_validation(self):
        with pytest.raises(ValueError):
            SalsaState(tuple(range(15)))
        with pytest.raises(ValueError):
            SalsaState(tuple(range(16)), rounds=10)
        with pytest.raises(ValueError):
            SalsaState.from_key_nonce(bytes(20), bytes(8))


class TestSalsaStream:
    """Known answers, seek coherence and round variants"""

    @pytest.mark.parametrize("cipher", list(ZERO_KEY_FIRST_BLOCK))
    def test_zero_key_first_block(self, cipher):
        """All-zero 256-bit key and nonce"""
        print(f"\n🧪 Testing {cipher.display_name} zero key block...")
        out = new_cipher(cipher, bytes(32), bytes(8)).keystream(64)
        assert out.hex() == ZERO_KEY_FIRST_BLOCK[cipher]
        print(f"✅ {out.hex()[:32]}...")

    def test_salsa20_20_short_key(self):
        """128-bit key 80 00 .. 00, zero nonce"""
        out = new_cipher(CipherId.SALSA20_20, bytes([0x80]) + bytes(15), bytes(8)).keystream(64)
        assert out.hex() == (
            "4dfa5e481da23ea09a31022050859936da52fcee218005164f267cb65f5cfd7f"
            "2b4f97e0ff16924a52df269515110a07f9e460bc65ef95da58f740b7d1dbb0aa"
        )

    def test_block_function_matches_stream(self):
        state = SalsaState.from_key_nonce(bytes(32), bytes(8), rounds=12)
        assert salsa_block(state).hex() == ZERO_KEY_FIRST_BLOCK[CipherId.SALSA20_12]

    def test_round_variants_differ(self):
        outs = {new_cipher(c, bytes(32), bytes(8)).keystream(64) for c in ZERO_KEY_FIRST_BLOCK}
        assert len(outs) == 3

    def test_seek_coherence(self):
        """100 random (offset, length) pairs match slices of the from-zero stream"""
        print("\n🧪 Testing seek coherence...")
        rng = np.random.RandomState(42)
        key, iv = rng.bytes(32), rng.bytes(8)
        whole = new_cipher(CipherId.SALSA20_12, key, iv).keystream(8192)

        instance = new_cipher(CipherId.SALSA20_12, key, iv)
        for _ in range(100):
            offset = int(rng.randint(0, 8192))
            length = int(rng.randint(0, 8192 - offset + 1))
            instance.seek(offset)
            assert instance.keystream(length) == whole[offset:offset + length], f"offset {offset}"
            assert instance.position == offset + length

        print("✅ 100 seeks coherent")

    def test_counter_independence(self):
        """Block n depends only on the counter, not on what was read before"""
        key, iv = bytes(range(32)), bytes(range(8))
        fresh = new_cipher(CipherId.SALSA20_12, key, iv)
        fresh.seek(64 * 1000)
        direct = fresh.keystream(64)

        state = SalsaState.from_key_nonce(key, iv, rounds=12).with_counter(1000)
        assert salsa_block(state) == direct

    def test_counter_crosses_32_bits(self):
        """The block counter carries into the high word"""
        core = Salsa20Core(bytes(32), rounds=12)
        core.load_iv(bytes(8))
        core.seek_block((1 << 32) - 1)
        core.next_block()
        assert core.state.counter == 1 << 32
        assert core.state.words[8] == 0 and core.state.words[9] == 1


class TestSalsaProperties:
    """Statistical properties of the rounds and the block function"""

    def test_double_round_injective(self):
        """Distinct inputs never collide over 10^4 random pairs"""
        print("\n🧪 Testing double round on 10^4 random pairs...")
        rng = np.random.default_rng(42)
        pairs = rng.integers(0, 2**32, size=(10_000, 2, 16), dtype=np.uint64).tolist()
        for x, y in pairs:
            if x == y:
                continue
            assert double_round(x) != double_round(y)
        print("✅ No collisions")

    def test_counter_pairs_differ(self):
        """Blocks at 256 distinct counter pairs all differ"""
        rng = np.random.default_rng(7)
        state = SalsaState.from_key_nonce(rng.bytes(32), rng.bytes(8), rounds=12)
        counters = rng.integers(0, 2**63, size=(256, 2), dtype=np.uint64).tolist()
        for i, j in counters:
            if i == j:
                j = i + 1
            assert salsa_block(state.with_counter(i)) != salsa_block(state.with_counter(j)), f"{i} vs {j}"

    def test_feed_forward_changes_output(self):
        """The final addition of the input is part of every block"""
        rng = np.random.default_rng(11)
        for _ in range(200):
            state = SalsaState.from_key_nonce(rng.bytes(32), rng.bytes(8), rounds=12,
                                              counter=int(rng.integers(1, 2**32)))
            permuted = list(state.words)
            for _ in range(state.rounds // 2):
                permuted = double_round(permuted)
            block = load_words_le(salsa_block(state))
            assert block != tuple(permuted)
            assert sum(b != p for b, p in zip(block, permuted)) >= 12
