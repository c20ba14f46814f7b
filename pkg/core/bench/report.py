"""
CSV rendering of benchmark reports

Layout: ``# key: value`` metadata lines, then a header row and one row per
(cipher, length) in cipher-enum then length order.
"""

import io
from pathlib import Path
from typing import Union

import pandas as pd

from core.models.data_structures import BenchReport

CSV_COLUMNS = ['cipher', 'length_bytes', 'iterations', 'mean_ms', 'median_ms', 'stddev_ms', 'min_ms', 'max_ms']


def report_frame(report: BenchReport) -> pd.DataFrame:
    return pd.DataFrame([c.to_row() for c in report.sorted_cells()], columns=CSV_COLUMNS)


def emit_csv(report: BenchReport) -> str:
    """Render a report as text; an empty grid yields metadata and header only"""
    lines = [f"# {key}: {str(value).replace(chr(10), ' ')}" for key, value in report.platform.items()]
    buffer = io.StringIO()
    report_frame(report).to_csv(buffer, index=False, float_format='%.6f', lineterminator='\n')
    return ''.join(line + '\n' for line in lines) + buffer.getvalue()


def read_csv(source: Union[str, Path]) -> pd.DataFrame:
    """Load emitted CSV text or a file back into a frame (metadata lines skipped)"""
    if isinstance(source, Path) or '\n' not in str(source):
        return pd.read_csv(source, comment='#')
    return pd.read_csv(io.StringIO(source), comment='#')
