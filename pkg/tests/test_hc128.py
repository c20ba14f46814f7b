"""
Unit tests for HC-128: component functions, table setup, keystream words and
the table-coverage property of the step function.
"""

import sys
import os
import struct
from collections import Counter

import pytest

# Add the project root to the path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.ciphers import BadIvLength, BadKeyLength, CipherId, new_cipher
from core.ciphers.hc128 import HcState, TABLE_SIZE, f1, f2, g1, g2, h1, h2, init, step


def words(text: str):
    return [int(w, 16) for w in text.split()]


class TestHcFunctions:
    """f, g and h helpers"""

    def test_f1_hand_value(self):
        """f1(0x80000000) = rotr7 ^ rotr18 ^ shr3"""
        print("\n🧪 Testing f1...")
        assert f1(0x80000000) == 0x11002000
        print("✅ f1(0x80000000) = 0x11002000")

    def test_f_zero(self):
        assert f1(0) == 0
        assert f2(0) == 0

    def test_f2_hand_value(self):
        # rotr17 = 0x00004000, rotr19 = 0x00001000, shr10 = 0x00200000
        assert f2(0x80000000) == 0x00205000

    def test_g_zero(self):
        assert g1(0, 0, 0) == 0
        assert g2(0, 0, 0) == 0

    def test_h_lookups(self):
        """h1 reads Q, h2 reads P, at bytes 0 and 2 of the argument"""
        P = list(range(TABLE_SIZE))
        Q = [1000 + i for i in range(TABLE_SIZE)]
        state = HcState(P, Q)
        x = 0x00AB0012
        assert h1(state, x) == Q[0x12] + Q[256 + 0xAB]
        assert h2(state, x) == P[0x12] + P[256 + 0xAB]

    def test_table_size_validation(self):
        with pytest.raises(ValueError):
            HcState([0] * 511, [0] * 512)


class TestHcSetup:
    """Tables after the 1024 warm-up steps"""

    def test_zero_key_tables(self):
        print("\n🧪 Testing zero key/IV tables...")
        state = init(bytes(16), bytes(16))
        assert state.P[:4] == words("b991e2da 6f8933e2 407f76ed 744376b1")
        assert state.Q[:4] == words("4c65fc98 cc962b76 345d9678 aef615e0")
        assert state.i == 0
        print("✅ P and Q match")

    @pytest.mark.parametrize("key,iv,p_head,first_words", [
        (
            bytes(16),
            bytes([1]) + bytes(15),
            "f1959895 67e6b463 5729a4ec 91fbd6f8",
            "c01893d5 b7dbe958 8f65ec98 64176604",
        ),
        (
            bytes([0x55]) + bytes(15),
            bytes(16),
            "cfca968a b9763df7 f034b694 56fa4fc1",
            "518251a4 04b4930a b02af931 0639f032",
        ),
    ])
    def test_setup_variants(self, key, iv, p_head, first_words):
        state = init(key, iv)
        assert state.P[:4] == words(p_head)
        assert [step(state) for _ in range(4)] == words(first_words)

    def test_byte_ordered_key_and_iv(self):
        state = init(bytes(range(16)), bytes(range(15, -1, -1)))
        assert state.P[0] == 0xaf760956
        assert [step(state) for _ in range(4)] == words("13fff496 49e13a44 e7369d2d af4853e4")

    def test_length_checks(self):
        with pytest.raises(BadKeyLength):
            init(bytes(32), bytes(16))
        with pytest.raises(BadIvLength):
            init(bytes(16), bytes(8))


class TestHcStream:
    """Keystream words and table coverage"""

    def test_zero_key_words(self):
        print("\n🧪 Testing zero key/IV keystream words...")
        state = init(bytes(16), bytes(16))
        out = [step(state) for _ in range(16)]
        assert out == words(
            "73150082 3bfd03a0 fb2fd77f aa63af0e de122fc6 a7dc29b6 62a68527 8b75ec68 "
            "9036db1e 81896005 00ade078 491fbf9a 1cdc3013 6c3d6e24 90f664b2 9cd57102"
        )
        print("✅ 16 words match")

    def test_bytes_are_little_endian_words(self):
        stream = new_cipher(CipherId.HC128, bytes(16), bytes(16)).keystream(32)
        assert stream.hex() == "82001573a003fd3b7fd72ffb0eaf63aac62f12deb629dca72785a66268ec758b"
        state = init(bytes(16), bytes(16))
        assert stream == b"".join(struct.pack("<I", step(state)) for _ in range(8))

    def test_one_write_per_step(self):
        state = init(bytes(16), bytes(16))
        state.write_log = []
        for n in range(1, 50):
            step(state)
            assert len(state.write_log) == n

    def test_table_coverage(self):
        """Every slot of P and Q is written exactly once per aligned 1024-step window"""
        print("\n🧪 Testing table coverage over 4 windows...")
        state = init(bytes(range(16)), bytes(range(16)))
        state.write_log = []
        for _ in range(4 * 1024):
            step(state)

        for window in range(4):
            entries = state.write_log[window * 1024:(window + 1) * 1024]
            counts = Counter(entries)
            assert len(counts) == 2 * TABLE_SIZE, f"window {window} missed slots"
            assert set(counts.values()) == {1}, f"window {window} rewrote a slot"
            assert entries[:TABLE_SIZE] == [("P", j) for j in range(TABLE_SIZE)]
            assert entries[TABLE_SIZE:] == [("Q", j) for j in range(TABLE_SIZE)]

        print("✅ 4 windows fully covered")

    def test_iv_reset_reruns_setup(self):
        key = bytes(range(16))
        instance = new_cipher(CipherId.HC128, key, bytes(16))
        instance.keystream(100)
        instance.reset(bytes([1]) + bytes(15))
        expected = new_cipher(CipherId.HC128, key, bytes([1]) + bytes(15)).keystream(64)
        assert instance.keystream(64) == expected
