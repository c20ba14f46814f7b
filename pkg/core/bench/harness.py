"""
Benchmark Harness
Times apply() per (cipher, message length) the way the published experiment did:
many executions of one fixed message, averaged, optionally including key/IV setup.
"""

import math
import time
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import structlog

from core.bench.platform_info import capture_platform
from core.ciphers.cipher_core import CipherId, create_instance, new_cipher
from core.models.data_structures import BenchCell, BenchReport
from core.models.schemas import BenchConfig

logger = structlog.get_logger(__name__)

# Clock granularity above this share of one sample triggers batching
GRANULARITY_LIMIT = 0.05
PILOT_SAMPLES = 3

Clock = Callable[[], int]


def bench_key_length(cipher: CipherId) -> int:
    """Salsa20 runs with 256-bit keys; the others with 128-bit keys"""
    return max(cipher.key_lengths) if cipher.is_salsa else min(cipher.key_lengths)


def make_inputs(config: BenchConfig, cipher: CipherId, length: int) -> Tuple[bytes, bytes, bytes]:
    """Seeded (key, iv, message), fixed per (seed, cipher, length)"""
    rng = np.random.default_rng([config.seed, list(CipherId).index(cipher), length])
    key = rng.bytes(bench_key_length(cipher))
    iv = rng.bytes(cipher.iv_length)
    message = rng.bytes(length)
    return key, iv, message


def _sampler(cipher: CipherId, key: bytes, iv: bytes, message: bytes, include_setup: bool) -> Callable[[], bytes]:
    if include_setup:
        def sample() -> bytes:
            return new_cipher(cipher, key, iv).apply(message)
    else:
        instance = new_cipher(cipher, key, iv)

        def sample() -> bytes:
            return instance.apply(message)
    return sample


def choose_batch_size(pilot_ns: float, resolution_ns: float) -> int:
    """Smallest batch whose duration keeps clock granularity within GRANULARITY_LIMIT"""
    if pilot_ns <= 0:
        pilot_ns = 1.0
    if resolution_ns <= GRANULARITY_LIMIT * pilot_ns:
        return 1
    return int(math.ceil(resolution_ns / (GRANULARITY_LIMIT * pilot_ns)))


def summarize(cipher: CipherId, length: int, samples_ns: List[float], batch_size: int = 1) -> BenchCell:
    ms = np.asarray(samples_ns, dtype=float) / 1e6
    return BenchCell(
        cipher=cipher,
        length_bytes=length,
        iterations=len(ms),
        mean_ms=float(np.mean(ms)),
        median_ms=float(np.median(ms)),
        stddev_ms=float(np.std(ms, ddof=1)) if len(ms) > 1 else 0.0,
        min_ms=float(np.min(ms)),
        max_ms=float(np.max(ms)),
        batch_size=batch_size,
    )


def time_cell(
    config: BenchConfig,
    cipher: CipherId,
    length: int,
    clock: Clock = time.perf_counter_ns,
    resolution_ns: Optional[float] = None,
) -> BenchCell:
    """Warm up, then record config.iterations timed samples for one cell"""
    key, iv, message = make_inputs(config, cipher, length)
    sample = _sampler(cipher, key, iv, message, config.include_setup)

    for _ in range(config.warmup_iterations):
        sample()

    if resolution_ns is None:
        resolution_ns = time.get_clock_info('perf_counter').resolution * 1e9
    pilot = []
    for _ in range(PILOT_SAMPLES):
        start = clock()
        sample()
        pilot.append(clock() - start)
    batch = choose_batch_size(min(pilot), resolution_ns)

    samples: List[float] = []
    for _ in range(config.iterations):
        start = clock()
        for _ in range(batch):
            sample()
        # sub-resolution readings floor at one tick
        samples.append(max(clock() - start, 1) / batch)

    return summarize(cipher, length, samples, batch)


def run_benchmark(
    config: BenchConfig,
    clock: Clock = time.perf_counter_ns,
    resolution_ns: Optional[float] = None,
) -> BenchReport:
    """
    Run the full (cipher x length) grid

    Single-threaded; cipher construction is checked for every cipher
    before any timing starts.

    Args:
        config: Validated benchmark parameters
        clock: Monotonic nanosecond clock
        resolution_ns: Clock granularity override (defaults to the perf_counter resolution)

    Returns:
        BenchReport with one cell per (cipher, length)
    """
    for cipher in config.ciphers:
        key, iv, _ = make_inputs(config, cipher, config.lengths[0])
        create_instance(cipher, key, iv, context='benchmark setup')

    platform_meta = capture_platform(config.seed)
    report = BenchReport(platform=platform_meta)
    for name, value in config.describe().items():
        if name != 'seed':
            report.platform.setdefault(f"config_{name}", value)

    logger.info(
        f"🚀 Benchmark: {len(config.ciphers)} ciphers x {len(config.lengths)} lengths, "
        f"{config.iterations} iterations (warm-up {config.warmup_iterations}), "
        f"include_setup={config.include_setup}, seed={config.seed}"
    )

    batched: Dict[str, int] = {}
    for cipher in config.ciphers:
        for length in config.lengths:
            cell = time_cell(config, cipher, length, clock=clock, resolution_ns=resolution_ns)
            report.cells.append(cell)
            if cell.batch_size > 1:
                batched[f"{cipher.value}/{length}"] = cell.batch_size
        logger.info(f"📊 {cipher.display_name} done")

    if batched:
        report.platform['batched_cells'] = ' '.join(f"{k}x{v}" for k, v in batched.items())
        logger.warning(f"⚠️  Clock granularity forced batching for {len(batched)} cells")
    return report


def setup_dominance(report: BenchReport) -> Dict[CipherId, float]:
    """mean(shortest length) / mean(longest length) per cipher"""
    lengths = report.lengths
    if len(lengths) < 2:
        return {}
    short, long_ = lengths[0], lengths[-1]
    ratios = {}
    for cipher in report.ciphers:
        a, b = report.cell(cipher, short), report.cell(cipher, long_)
        if a is not None and b is not None and b.mean_ms > 0:
            ratios[cipher] = a.mean_ms / b.mean_ms
    return ratios
