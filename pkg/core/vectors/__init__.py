"""
Known-answer vectors - corpus loader and verifier
"""

from .loader import BadHex, ParseError, UnknownCipherRecord, load_vectors, load_vectors_file
from .verifier import verify, verify_record

__all__ = [
    'BadHex',
    'ParseError',
    'UnknownCipherRecord',
    'load_vectors',
    'load_vectors_file',
    'verify',
    'verify_record',
]
