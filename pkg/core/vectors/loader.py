"""
Known-answer vector file loader

Line-oriented UTF-8 format:

    # comment
    cipher=SALSA20_12 key=<hex> iv=<hex>
    stream[0..63]=<hex>
    stream[192..255]=<hex>

A header line opens a record; stream ranges are inclusive and must strictly
increase within a record; blank lines separate records.
"""

import re
import string
from pathlib import Path
from typing import List, Optional, Tuple, Union

import structlog

from core.ciphers.cipher_core import CipherError, CipherId, UnknownCipherId, check_iv, check_key
from core.models.data_structures import KnownAnswerRecord, StreamCheck

logger = structlog.get_logger(__name__)

STREAM_LINE = re.compile(r'^stream\[(\d+)\.\.(\d+)\]=(\S*)$')
HEX_DIGITS = frozenset(string.hexdigits)


class ParseError(ValueError):
    """Malformed vector file; carries the 1-based line number"""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        self.message = message
        super().__init__(f"line {line_no}: {message}")


class BadHex(ParseError):
    """Odd-length or non-hex field"""


class UnknownCipherRecord(ParseError):
    """Record header names a cipher outside CipherId"""


def _parse_hex(value: str, field: str, line_no: int) -> str:
    if len(value) % 2 or not set(value) <= HEX_DIGITS:
        raise BadHex(line_no, f"{field} is not an even-length hex string: {value!r}")
    return value.lower()


def _parse_header(line: str, line_no: int) -> Tuple[CipherId, str, str]:
    fields = {}
    for token in line.split():
        name, sep, value = token.partition('=')
        if not sep or name not in ('cipher', 'key', 'iv'):
            raise ParseError(line_no, f"unexpected header field {token!r}")
        if name in fields:
            raise ParseError(line_no, f"duplicate header field {name!r}")
        fields[name] = value

    missing = [name for name in ('cipher', 'key', 'iv') if name not in fields]
    if missing:
        raise ParseError(line_no, f"header missing {', '.join(missing)}")

    try:
        cipher = CipherId.parse(fields['cipher'])
    except UnknownCipherId as e:
        raise UnknownCipherRecord(line_no, str(e)) from e

    key_hex = _parse_hex(fields['key'], 'key', line_no)
    iv_hex = _parse_hex(fields['iv'], 'iv', line_no)
    try:
        check_key(cipher, bytes.fromhex(key_hex))
        check_iv(cipher, bytes.fromhex(iv_hex))
    except CipherError as e:
        raise ParseError(line_no, str(e)) from e
    return cipher, key_hex, iv_hex


def _parse_stream(line: str, line_no: int) -> StreamCheck:
    match = STREAM_LINE.match(line)
    if not match:
        raise ParseError(line_no, f"expected 'stream[<first>..<last>]=<hex>', got {line!r}")
    first, last = int(match.group(1)), int(match.group(2))
    if last < first:
        raise ParseError(line_no, f"empty range {first}..{last}")
    expected = _parse_hex(match.group(3), 'stream', line_no)
    if len(expected) != 2 * (last - first + 1):
        raise ParseError(
            line_no,
            f"range {first}..{last} needs {last - first + 1} bytes, got {len(expected) // 2}",
        )
    return StreamCheck(offset=first, expected_hex=expected)


def load_vectors(source: str) -> List[KnownAnswerRecord]:
    """
    Parse vector text into records, in file order

    Raises:
        ParseError: structural problem (with line number)
        BadHex: malformed hex field
        UnknownCipherRecord: unsupported cipher id
    """
    records: List[KnownAnswerRecord] = []
    header: Optional[Tuple[CipherId, str, str]] = None
    header_line = 0
    checks: List[StreamCheck] = []

    def close_record():
        nonlocal header, checks
        if header is None:
            return
        if not checks:
            raise ParseError(header_line, "record has no stream lines")
        cipher, key_hex, iv_hex = header
        records.append(KnownAnswerRecord(cipher, key_hex, iv_hex, tuple(checks), header_line))
        header, checks = None, []

    for line_no, raw in enumerate(source.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            if not raw.strip():
                close_record()
            continue

        if line.startswith('cipher='):
            close_record()
            header = _parse_header(line, line_no)
            header_line = line_no
            continue

        if header is None:
            raise ParseError(line_no, "stream line outside a record")
        check = _parse_stream(line, line_no)
        if checks and check.offset <= checks[-1].offset:
            raise ParseError(line_no, f"offset {check.offset} does not increase past {checks[-1].offset}")
        checks.append(check)

    close_record()
    logger.debug(f"📥 Loaded {len(records)} vector records")
    return records


def load_vectors_file(path: Union[str, Path]) -> List[KnownAnswerRecord]:
    return load_vectors(Path(path).read_text(encoding='utf-8'))
