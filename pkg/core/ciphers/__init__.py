"""
Stream Ciphers - eSTREAM software portfolio
Exports the uniform cipher interface
"""

from .cipher_core import (
    MAX_STREAM_BYTES,
    PORTFOLIO,
    BadIvLength,
    BadKeyLength,
    CipherError,
    CipherId,
    CipherInstance,
    NotSeekable,
    PositionOverflow,
    UnknownCipherId,
    apply,
    keystream,
    new_cipher,
    reset,
    seek,
)

__all__ = [
    'MAX_STREAM_BYTES',
    'PORTFOLIO',
    'BadIvLength',
    'BadKeyLength',
    'CipherError',
    'CipherId',
    'CipherInstance',
    'NotSeekable',
    'PositionOverflow',
    'UnknownCipherId',
    'apply',
    'keystream',
    'new_cipher',
    'reset',
    'seek',
]
