"""
Core Data Structures
Known-answer records, verification reports, benchmark cells and the
published reference dataset
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import pandas as pd

from core.ciphers.cipher_core import CipherId


# ============================================================================
# Known-answer tests
# ============================================================================

@dataclass(frozen=True)
class StreamCheck:
    """Expected keystream bytes starting at a byte offset"""
    offset: int
    expected_hex: str

    @property
    def length(self) -> int:
        return len(self.expected_hex) // 2

    @property
    def end(self) -> int:
        """Exclusive end offset"""
        return self.offset + self.length


@dataclass(frozen=True)
class KnownAnswerRecord:
    """One (cipher, key, IV) with its keystream checks"""
    cipher: CipherId
    key_hex: str
    iv_hex: str
    checks: Tuple[StreamCheck, ...]
    line_no: Optional[int] = None  # header line in the source file

    @property
    def key(self) -> bytes:
        return bytes.fromhex(self.key_hex)

    @property
    def iv(self) -> bytes:
        return bytes.fromhex(self.iv_hex)


@dataclass
class VerifyFailure:
    """A check that did not match (check_index is None for construction errors)"""
    record_index: int
    check_index: Optional[int]
    offset: Optional[int]
    expected: str
    actual: Optional[str]
    cipher: Optional[CipherId] = None
    error: Optional[str] = None

    def first_mismatch(self) -> Optional[int]:
        """Absolute stream offset of the first differing byte"""
        if self.actual is None or self.offset is None:
            return None
        for i in range(0, min(len(self.expected), len(self.actual)), 2):
            if self.expected[i:i + 2] != self.actual[i:i + 2]:
                return self.offset + i // 2
        return None

    def describe(self) -> str:
        name = self.cipher.value if self.cipher else "?"
        if self.error:
            return f"record {self.record_index} ({name}): {self.error}"
        mismatch = self.first_mismatch()
        where = f"first mismatch at byte {mismatch}" if mismatch is not None else "length mismatch"
        return (
            f"record {self.record_index} ({name}) check {self.check_index} "
            f"offset {self.offset}: {where}"
        )


@dataclass
class VerifyReport:
    """Outcome of running a vector corpus"""
    total: int = 0
    passed: int = 0
    failures: List[VerifyFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total and not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}: {self.passed}/{self.total} checks passed, {len(self.failures)} failed"


# ============================================================================
# Benchmark results
# ============================================================================

@dataclass
class BenchCell:
    """Timing statistics for one (cipher, message length)"""
    cipher: CipherId
    length_bytes: int
    iterations: int
    mean_ms: float
    median_ms: float
    stddev_ms: float
    min_ms: float
    max_ms: float
    batch_size: int = 1

    def to_row(self) -> Dict:
        return {
            'cipher': self.cipher.value,
            'length_bytes': self.length_bytes,
            'iterations': self.iterations,
            'mean_ms': self.mean_ms,
            'median_ms': self.median_ms,
            'stddev_ms': self.stddev_ms,
            'min_ms': self.min_ms,
            'max_ms': self.max_ms,
        }


@dataclass
class BenchReport:
    """Platform metadata plus one cell per (cipher, length)"""
    platform: Dict[str, str] = field(default_factory=dict)
    cells: List[BenchCell] = field(default_factory=list)

    def cell(self, cipher: CipherId, length_bytes: int) -> Optional[BenchCell]:
        for c in self.cells:
            if c.cipher == cipher and c.length_bytes == length_bytes:
                return c
        return None

    @property
    def ciphers(self) -> List[CipherId]:
        present = {c.cipher for c in self.cells}
        return [cid for cid in CipherId if cid in present]

    @property
    def lengths(self) -> List[int]:
        return sorted({c.length_bytes for c in self.cells})

    def sorted_cells(self) -> List[BenchCell]:
        order = {cid: i for i, cid in enumerate(CipherId)}
        return sorted(self.cells, key=lambda c: (order[c.cipher], c.length_bytes))

    def overall_mean(self, cipher: CipherId) -> Optional[float]:
        """Mean of the per-length means for one cipher"""
        means = [c.mean_ms for c in self.cells if c.cipher == cipher]
        return sum(means) / len(means) if means else None


# ============================================================================
# Published reference data
# ============================================================================

@dataclass
class DeviceInfo:
    """One handset from the published device table"""
    device: str
    os: str
    memory: str
    processor: str
    year: int


@dataclass
class ReferenceDataset:
    """
    Published execution times (device x cipher x length, ms) and device metadata

    ``times`` columns: device, cipher, length_bytes, time_ms, flag.
    A non-empty flag marks a cell whose source reading is ambiguous.
    """
    times: pd.DataFrame
    devices: List[DeviceInfo]
    published_overall_ms: Dict[CipherId, float] = field(default_factory=dict)
    published_average_row: Dict[CipherId, List[float]] = field(default_factory=dict)
    findings: List[str] = field(default_factory=list)
    commentary: List[str] = field(default_factory=list)

    @property
    def device_names(self) -> List[str]:
        return list(dict.fromkeys(self.times['device']))

    @property
    def ciphers(self) -> List[CipherId]:
        present = set(self.times['cipher'])
        return [cid for cid in CipherId if cid.value in present]

    @property
    def lengths(self) -> List[int]:
        return sorted(int(n) for n in self.times['length_bytes'].unique())

    def value(self, device: str, cipher: CipherId, length_bytes: int) -> Optional[float]:
        t = self.times
        hit = t[(t['device'] == device) & (t['cipher'] == cipher.value) & (t['length_bytes'] == length_bytes)]
        if hit.empty:
            return None
        return float(hit['time_ms'].iloc[0])

    def cross_device_average(self, cipher: CipherId, length_bytes: int) -> Optional[float]:
        t = self.times
        col = t[(t['cipher'] == cipher.value) & (t['length_bytes'] == length_bytes)]['time_ms']
        return float(col.mean()) if len(col) else None

    def overall_average(self, cipher: CipherId) -> Optional[float]:
        col = self.times[self.times['cipher'] == cipher.value]['time_ms']
        return float(col.mean()) if len(col) else None

    def winners(self) -> Dict[int, CipherId]:
        """Fastest cipher per length by cross-device average"""
        means = self.times.groupby(['length_bytes', 'cipher'])['time_ms'].mean()
        result = {}
        for length in self.lengths:
            per_cipher = means.loc[length]
            result[length] = CipherId(per_cipher.idxmin())
        return result
