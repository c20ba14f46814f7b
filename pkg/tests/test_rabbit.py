"""
Unit tests for Rabbit: g-function, counter system, key/IV setup and keystream.
"""

import sys
import os

import numpy as np
import pytest

# Add the project root to the path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.ciphers import BadIvLength, BadKeyLength, CipherId, new_cipher
from core.ciphers.rabbit import (
    A_CONST,
    RabbitState,
    counter_update,
    extract,
    g_function,
    iv_setup,
    key_setup,
    next_state,
)


def words(text: str):
    return tuple(int(w, 16) for w in text.split())


def no_iv_stream(key: bytes, blocks: int) -> bytes:
    state = key_setup(key)
    out = b""
    for _ in range(blocks):
        state = next_state(state)
        out += extract(state)
    return out


ZERO_MASTER_X = words("6e9e1d18 f5a54e5c f8fd49c6 9b94253f dcd14a79 1f32fa20 d2055921 53f371d0")
ZERO_MASTER_C = words("e802074f 5206296d 01486df2 67203ce4 23aace55 26e87a8f cc2e04f2 d6a0f672")


class TestRabbitPrimitives:
    """g-function and counter system"""

    def test_g_zero(self):
        assert g_function(0, 0) == 0

    def test_g_matches_definition(self):
        """g = LSW(s^2) ^ MSW(s^2) with s = u + v mod 2^32"""
        rng = np.random.RandomState(42)
        for _ in range(500):
            u, v = int(rng.randint(0, 2**32, dtype=np.uint64)), int(rng.randint(0, 2**32, dtype=np.uint64))
            s = (u + v) % 2**32
            sq = s * s
            assert g_function(u, v) == (sq % 2**32) ^ (sq >> 32)

    def test_counter_wraps_with_carry(self):
        """All-ones counters plus carry 1 land on A with carry out 1"""
        print("\n🧪 Testing counter carry chain...")
        state = RabbitState((0,) * 8, (0xFFFFFFFF,) * 8, 1)
        updated = counter_update(state)
        assert updated.c == A_CONST
        assert updated.carry == 1
        print("✅ Carry propagates through all eight counters")

    def test_counter_from_zero(self):
        updated = counter_update(RabbitState((0,) * 8, (0,) * 8, 0))
        assert updated.c == A_CONST
        assert updated.carry == 0

    def test_counter_matches_wide_integer(self):
        """The chained counters behave as one 256-bit integer"""
        print("\n🧪 Testing counters against a 256-bit oracle...")
        rng = np.random.RandomState(42)
        a_wide = sum(a << (32 * j) for j, a in enumerate(A_CONST))
        for _ in range(10_000):
            c = tuple(int(x) for x in rng.randint(0, 2**32, size=8, dtype=np.uint64))
            carry = int(rng.randint(0, 2))
            updated = counter_update(RabbitState((0,) * 8, c, carry))

            wide = sum(cj << (32 * j) for j, cj in enumerate(c)) + a_wide + carry
            expected = tuple((wide >> (32 * j)) & 0xFFFFFFFF for j in range(8))
            assert updated.c == expected
            assert updated.carry == wide >> 256
        print("✅ 10^4 random counter states match")

    def test_state_validation(self):
        with pytest.raises(ValueError):
            RabbitState((0,) * 7, (0,) * 8)
        with pytest.raises(ValueError):
            RabbitState((0,) * 8, (0,) * 8, 2)

    def test_to_bytes(self):
        state = RabbitState(tuple(range(8)), tuple(range(8, 16)), 1)
        raw = state.to_bytes()
        assert len(raw) == 65
        assert raw[-1] == 1


class TestRabbitSetup:
    """Key setup and IV setup snapshots for the all-zero key"""

    def test_master_state(self):
        print("\n🧪 Testing zero-key master state...")
        master = key_setup(bytes(16))
        assert master.x == ZERO_MASTER_X
        assert master.c == ZERO_MASTER_C
        assert master.carry == 1
        print("✅ Master state matches")

    def test_one_iteration(self):
        state = next_state(key_setup(bytes(16)))
        assert state.x == words("b572e827 7f2dda66 4303151b fcaba938 8f00a9c1 1f25b668 6b31a85b 503db9a5")
        assert state.c == words("3536da9d 25535e41 361bbb27 b4551031 f6f80328 5bbbc7c3 1962d83f a9ee2b46")
        assert state.carry == 1

    def test_zero_iv_setup(self):
        """A zero IV leaves the counters unmixed, so setup is four plain iterations"""
        state = iv_setup(key_setup(bytes(16)), bytes(8))
        assert state.x == words("825ce07b 12633711 a0fe547b 75cf0e64 92ef9246 89e633c7 2c7442ff 2c6b4782")
        assert state.c == words("1cd55487 9f3afcbb d495a2c5 9bf38a18 70dfa1a2 fa35af62 01015226 23d5c9c0")
        assert state.carry == 1

    def test_setup_length_checks(self):
        with pytest.raises(BadKeyLength):
            key_setup(bytes(15))
        with pytest.raises(BadIvLength):
            iv_setup(key_setup(bytes(16)), bytes(16))


class TestRabbitStream:
    """Keystream known answers"""

    def test_zero_key_without_iv(self):
        """Key-only mode: extract after each iteration of the master state"""
        print("\n🧪 Testing Rabbit key-only stream...")
        out = no_iv_stream(bytes(16), 3)
        assert out.hex() == (
            "02f74a1c26456bf5ecd6a536f05457b1"
            "a78ac689476c697b390c9cc515d8e888"
            "96d6731688d168da51d40c70c3a116f4"
        )
        print("✅ Key-only stream matches")

    def test_zero_key_zero_iv(self):
        out = new_cipher(CipherId.RABBIT, bytes(16), bytes(8)).keystream(48)
        assert out.hex() == (
            "edb70567375dcd7cd89554f85e27a7c6"
            "8d4adc7032298f7bd4eff504aca6295f"
            "668fbf478adb2be51e6cde292b82de2a"
        )

    def test_zero_iv_differs_from_key_only(self):
        """A zero IV is a real IV setup, not the key-only mode"""
        assert new_cipher(CipherId.RABBIT, bytes(16), bytes(8)).keystream(48) != no_iv_stream(bytes(16), 3)

    def test_reset_is_idempotent(self):
        key, iv = bytes(range(16)), bytes(range(8))
        instance = new_cipher(CipherId.RABBIT, key, iv)
        first = instance.keystream(80)
        instance.reset(iv)
        instance.reset(iv)
        assert instance.keystream(80) == first

    def test_master_state_is_retained(self):
        """IV resets start from the stored master state, not the current one"""
        key = bytes(range(16))
        instance = new_cipher(CipherId.RABBIT, key, bytes(8))
        instance.keystream(1000)
        instance.reset(bytes(range(8)))
        assert instance.keystream(32) == new_cipher(CipherId.RABBIT, key, bytes(range(8))).keystream(32)


class TestRabbitPeriod:
    """Cheap sanity check on the output period"""

    def test_no_repeated_block(self):
        """2^12 consecutive blocks under a random key are pairwise distinct"""
        print("\n🧪 Testing 4096 Rabbit blocks for repeats...")
        rng = np.random.RandomState(42)
        stream = new_cipher(CipherId.RABBIT, rng.bytes(16), rng.bytes(8)).keystream(16 << 12)
        blocks = {stream[i:i + 16] for i in range(0, len(stream), 16)}
        assert len(blocks) == 1 << 12
        print("✅ No repeats")
