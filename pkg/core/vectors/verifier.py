"""
Known-answer verifier - runs every record against the cipher library
"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence, Tuple

import structlog

from core.ciphers.cipher_core import CipherError, new_cipher
from core.models.data_structures import KnownAnswerRecord, VerifyFailure, VerifyReport

logger = structlog.get_logger(__name__)


def verify_record(record_index: int, record: KnownAnswerRecord) -> Tuple[int, List[VerifyFailure]]:
    """
    Check one record

    Returns:
        (checks passed, failures)
    """
    try:
        instance = new_cipher(record.cipher, record.key, record.iv)
    except (CipherError, ValueError) as e:
        failures = [
            VerifyFailure(
                record_index=record_index,
                check_index=None,
                offset=check.offset,
                expected=check.expected_hex,
                actual=None,
                cipher=record.cipher,
                error=f"construction failed: {e}",
            )
            for check in record.checks
        ]
        return 0, failures

    passed = 0
    failures: List[VerifyFailure] = []
    for check_index, check in enumerate(record.checks):
        if check.offset < instance.position and not instance.seekable:
            instance.reset(record.iv)
        try:
            instance.skip_to(check.offset)
            actual = instance.keystream(check.length).hex()
        except CipherError as e:
            failures.append(VerifyFailure(
                record_index=record_index,
                check_index=check_index,
                offset=check.offset,
                expected=check.expected_hex,
                actual=None,
                cipher=record.cipher,
                error=str(e),
            ))
            continue
        if actual == check.expected_hex:
            passed += 1
        else:
            failures.append(VerifyFailure(
                record_index=record_index,
                check_index=check_index,
                offset=check.offset,
                expected=check.expected_hex,
                actual=actual,
                cipher=record.cipher,
            ))
    return passed, failures


def verify(records: Sequence[KnownAnswerRecord], workers: int = 1) -> VerifyReport:
    """
    Run every record; records are independent and may run in parallel

    Args:
        records: Parsed vector records
        workers: Thread count (1 runs inline)

    Returns:
        VerifyReport with failures in record order
    """
    report = VerifyReport()
    if workers > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(verify_record, range(len(records)), records))
    else:
        results = [verify_record(i, r) for i, r in enumerate(records)]

    for record, (passed, failures) in zip(records, results):
        report.total += len(record.checks)
        report.passed += passed
        report.failures.extend(failures)

    if report.ok:
        logger.info(f"✅ {report.summary()}")
    else:
        logger.warning(f"❌ {report.summary()}")
    return report
