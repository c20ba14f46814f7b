"""
Benchmark harness, CSV reporting and comparison with published handset timings
"""

from core.bench.harness import run_benchmark, setup_dominance, make_inputs, choose_batch_size
from core.bench.report import emit_csv, read_csv, CSV_COLUMNS
from core.bench.reference import (
    load_reference,
    compare_reference,
    host_findings,
    ReferenceDataError,
    SETUP_DOMINANCE_RATIO,
)
from core.bench.platform_info import capture_platform
from core.bench.figures import build_figures, write_figures

__all__ = [
    'run_benchmark',
    'setup_dominance',
    'make_inputs',
    'choose_batch_size',
    'emit_csv',
    'read_csv',
    'CSV_COLUMNS',
    'load_reference',
    'compare_reference',
    'host_findings',
    'ReferenceDataError',
    'SETUP_DOMINANCE_RATIO',
    'capture_platform',
    'build_figures',
    'write_figures',
]
