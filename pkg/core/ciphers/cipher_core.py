"""
Cipher Core - Uniform Stream Cipher Abstraction
Construct from key + IV, emit keystream, XOR-apply, reset and (Salsa20 only) seek.

Every cipher plugs in as a ``KeystreamCore`` that produces fixed-size blocks;
``CipherInstance`` turns those blocks into a byte-granular stream with a position cursor.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
import structlog

logger = structlog.get_logger(__name__)

# Uniform stream length cap for every cipher, in bytes
MAX_STREAM_BYTES = 1 << 38

KeyMaterial = bytes
InitVector = bytes


class CipherId(str, Enum):
    """Supported ciphers"""
    SALSA20_12 = "SALSA20_12"
    SALSA20_8 = "SALSA20_8"
    SALSA20_20 = "SALSA20_20"
    RABBIT = "RABBIT"
    HC128 = "HC128"
    SOSEMANUK = "SOSEMANUK"

    @property
    def display_name(self) -> str:
        return _CIPHER_INFO[self][0]

    @property
    def key_lengths(self) -> Tuple[int, ...]:
        return _CIPHER_INFO[self][1]

    @property
    def iv_length(self) -> int:
        return _CIPHER_INFO[self][2]

    @property
    def is_salsa(self) -> bool:
        return self.value.startswith("SALSA20")

    @classmethod
    def parse(cls, text: str) -> "CipherId":
        """
        Parse a cipher identifier

        Accepts enumeration names in any case and the display names
        ("salsa20/12", "hc-128", ...); '-' and '/' stand for '_'.

        Raises:
            UnknownCipherId: text names no supported cipher
        """
        key = str(text).strip().upper().replace("/", "_").replace("-", "_")
        for candidate in (key, key.replace("_", "")):
            if candidate in cls.__members__:
                return cls[candidate]
        raise UnknownCipherId(text)


_CIPHER_INFO: Dict[CipherId, Tuple[str, Tuple[int, ...], int]] = {
    CipherId.SALSA20_12: ("Salsa20/12", (16, 32), 8),
    CipherId.SALSA20_8: ("Salsa20/8", (16, 32), 8),
    CipherId.SALSA20_20: ("Salsa20/20", (16, 32), 8),
    CipherId.RABBIT: ("Rabbit", (16,), 8),
    CipherId.HC128: ("HC-128", (16,), 16),
    CipherId.SOSEMANUK: ("Sosemanuk", tuple(range(16, 33)), 16),
}

# The four eSTREAM software-profile portfolio ciphers, in enumeration order
PORTFOLIO: Tuple[CipherId, ...] = (
    CipherId.SALSA20_12,
    CipherId.RABBIT,
    CipherId.HC128,
    CipherId.SOSEMANUK,
)


# ============================================================================
# Errors
# ============================================================================

class CipherError(Exception):
    """Base class for cipher construction and stream errors"""


def _describe_lengths(lengths: Tuple[int, ...]) -> str:
    if len(lengths) > 2 and lengths == tuple(range(lengths[0], lengths[-1] + 1)):
        return f"{lengths[0]}..{lengths[-1]}"
    return " or ".join(str(n) for n in lengths)


class BadKeyLength(CipherError, ValueError):
    """Key length not accepted by the cipher"""

    def __init__(self, cipher: CipherId, expected: Tuple[int, ...], actual: int):
        self.cipher = cipher
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"{cipher.value} key must be {_describe_lengths(expected)} bytes, got {actual}"
        )


class BadIvLength(CipherError, ValueError):
    """IV length not accepted by the cipher"""

    def __init__(self, cipher: CipherId, expected: Tuple[int, ...], actual: int):
        self.cipher = cipher
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"{cipher.value} IV must be {_describe_lengths(expected)} bytes, got {actual}"
        )


class PositionOverflow(CipherError):
    """Request would move the stream position past MAX_STREAM_BYTES"""

    def __init__(self, position: int, requested: int, limit: int = MAX_STREAM_BYTES):
        self.position = position
        self.requested = requested
        self.limit = limit
        super().__init__(
            f"stream position {position} + {requested} exceeds limit {limit}"
        )


class UnknownCipherId(CipherError, ValueError):
    """Identifier outside the closed CipherId enumeration"""

    def __init__(self, text: str):
        self.text = text
        names = ", ".join(c.value for c in CipherId)
        super().__init__(f"unknown cipher id {text!r} (expected one of {names})")


class NotSeekable(CipherError, TypeError):
    """seek() on a cipher without random access"""


def check_key(cipher_id: CipherId, key: KeyMaterial) -> None:
    if len(key) not in cipher_id.key_lengths:
        raise BadKeyLength(cipher_id, cipher_id.key_lengths, len(key))


def check_iv(cipher_id: CipherId, iv: InitVector) -> None:
    if len(iv) != cipher_id.iv_length:
        raise BadIvLength(cipher_id, (cipher_id.iv_length,), len(iv))


# ============================================================================
# Block cores
# ============================================================================

class KeystreamCore(ABC):
    """
    Fixed-block keystream producer

    Key-dependent setup happens in the constructor; ``load_iv`` derives the
    per-message state from it and may be called repeatedly.
    """

    block_size: int = 0
    seekable: bool = False

    @abstractmethod
    def load_iv(self, iv: InitVector) -> None:
        """(Re)initialize the per-message state from the retained key state"""

    @abstractmethod
    def next_block(self) -> bytes:
        """Produce the next block_size keystream bytes"""

    def seek_block(self, index: int) -> None:
        raise NotSeekable(f"{type(self).__name__} does not support random access")

    def wipe(self) -> None:
        """Best-effort zeroization of key copies and state"""


def _build_core(cipher_id: CipherId, key: KeyMaterial) -> KeystreamCore:
    # Local imports: the cipher modules import KeystreamCore from here
    if cipher_id.is_salsa:
        from .salsa20 import Salsa20Core, ROUNDS_BY_ID
        return Salsa20Core(key, rounds=ROUNDS_BY_ID[cipher_id])
    if cipher_id is CipherId.RABBIT:
        from .rabbit import RabbitCore
        return RabbitCore(key)
    if cipher_id is CipherId.HC128:
        from .hc128 import HC128Core
        return HC128Core(key)
    if cipher_id is CipherId.SOSEMANUK:
        from .sosemanuk import SosemanukCore
        return SosemanukCore(key)
    raise UnknownCipherId(str(cipher_id))


# ============================================================================
# Cipher instance
# ============================================================================

class CipherInstance:
    """
    Keyed, IV-initialized cipher with a byte position cursor

    Single-owner mutable state: never share one instance between threads.
    """

    def __init__(self, cipher_id: CipherId, core: KeystreamCore, iv: InitVector):
        self.cipher_id = cipher_id
        self._core = core
        self._buffer = b""
        self.position = 0
        core.load_iv(bytes(iv))

    def __repr__(self) -> str:
        return f"CipherInstance({self.cipher_id.value}, position={self.position})"

    @property
    def seekable(self) -> bool:
        return self._core.seekable

    @property
    def block_size(self) -> int:
        return self._core.block_size

    @property
    def buffered(self) -> int:
        """Unconsumed keystream bytes held from the last block"""
        return len(self._buffer)

    def _check_room(self, n: int) -> None:
        if self.position + n > MAX_STREAM_BYTES:
            raise PositionOverflow(self.position, n)

    def keystream(self, n: int) -> bytes:
        """
        Next n keystream bytes

        Raises:
            ValueError: n is negative
            PositionOverflow: position + n exceeds MAX_STREAM_BYTES
        """
        if n < 0:
            raise ValueError(f"keystream length must be non-negative, got {n}")
        if n == 0:
            return b""
        self._check_room(n)

        buf = self._buffer
        if n <= len(buf):
            self._buffer = buf[n:]
            self.position += n
            return buf[:n]

        parts = [buf]
        have = len(buf)
        next_block = self._core.next_block
        while have < n:
            block = next_block()
            parts.append(block)
            have += len(block)

        out = b"".join(parts)
        self._buffer = out[n:]
        self.position += n
        return out[:n]

    def apply(self, data: bytes) -> bytes:
        """XOR data with the keystream at the current position (encrypt == decrypt)"""
        ks = self.keystream(len(data))
        if not ks:
            return b""
        return np.bitwise_xor(
            np.frombuffer(data, dtype=np.uint8),
            np.frombuffer(ks, dtype=np.uint8),
        ).tobytes()

    def reset(self, iv: InitVector) -> "CipherInstance":
        """Re-initialize with a new IV, keeping the key; position back to 0"""
        check_iv(self.cipher_id, iv)
        self._core.load_iv(bytes(iv))
        self._buffer = b""
        self.position = 0
        return self

    def seek(self, byte_offset: int) -> None:
        """
        Jump to an absolute keystream offset (Salsa20 family only)

        Raises:
            NotSeekable: cipher has no random access
            PositionOverflow: offset at or beyond MAX_STREAM_BYTES
        """
        if not self._core.seekable:
            raise NotSeekable(f"{self.cipher_id.value} does not support seek")
        if byte_offset < 0:
            raise ValueError(f"seek offset must be non-negative, got {byte_offset}")
        if byte_offset >= MAX_STREAM_BYTES:
            raise PositionOverflow(byte_offset, 0)

        block_index, remainder = divmod(byte_offset, self._core.block_size)
        self._core.seek_block(block_index)
        self._buffer = self._core.next_block()[remainder:] if remainder else b""
        self.position = byte_offset

    def skip_to(self, byte_offset: int, chunk: int = 1 << 20) -> None:
        """
        Move forward to byte_offset, seeking where possible and discarding otherwise

        Raises:
            PositionOverflow: offset beyond MAX_STREAM_BYTES (checked before any discarding)
        """
        if self._core.seekable:
            self.seek(byte_offset)
            return
        if byte_offset > MAX_STREAM_BYTES:
            raise PositionOverflow(self.position, byte_offset - self.position)
        if byte_offset < self.position:
            raise ValueError(
                f"cannot rewind {self.cipher_id.value} from {self.position} to {byte_offset}"
            )
        while self.position < byte_offset:
            self.keystream(min(chunk, byte_offset - self.position))

    def wipe(self) -> None:
        self._core.wipe()
        self._buffer = b""

    def __del__(self):
        try:
            self.wipe()
        except Exception:
            pass


def new_cipher(cipher_id: CipherId, key: KeyMaterial, iv: InitVector) -> CipherInstance:
    """
    Build a fully initialized cipher instance at position 0

    Args:
        cipher_id: Cipher to instantiate (CipherId or parseable text)
        key: Key bytes, length per cipher
        iv: IV bytes, length per cipher

    Returns:
        CipherInstance ready to emit keystream

    Raises:
        BadKeyLength, BadIvLength, UnknownCipherId
    """
    if not isinstance(cipher_id, CipherId):
        cipher_id = CipherId.parse(cipher_id)
    key = bytes(key)
    iv = bytes(iv)
    check_key(cipher_id, key)
    check_iv(cipher_id, iv)
    return CipherInstance(cipher_id, _build_core(cipher_id, key), iv)


def keystream(instance: CipherInstance, n: int) -> bytes:
    return instance.keystream(n)


def apply(instance: CipherInstance, data: bytes) -> bytes:
    return instance.apply(data)


def reset(instance: CipherInstance, iv: InitVector) -> CipherInstance:
    return instance.reset(iv)


def seek(instance: CipherInstance, byte_offset: int) -> None:
    instance.seek(byte_offset)


def create_instance(
    cipher_id: CipherId,
    key: KeyMaterial,
    iv: InitVector,
    context: Optional[str] = None,
) -> CipherInstance:
    """new_cipher with a logged diagnostic on construction failure"""
    try:
        return new_cipher(cipher_id, key, iv)
    except CipherError as e:
        logger.error(f"❌ Cannot construct {cipher_id}{f' ({context})' if context else ''}: {e}")
        raise
